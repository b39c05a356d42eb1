#include "waringlab/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "waringlab/error.hpp"
#include "waringlab/parallel.hpp"

namespace waringlab {

namespace {

constexpr std::size_t kListedFailures = 20;

struct Outcome {
  bool pass = false;
  Json record = Json::object();
};

std::uint64_t case_seed(const SuiteOptions& o, std::uint64_t stream, std::uint64_t index) {
  return Rng::derive_seed(Rng::derive_seed(o.seed, stream), index);
}

std::vector<Outcome> run_cases(SuiteResult& r, std::size_t n, const std::function<Outcome(std::size_t)>& f) {
  std::vector<Outcome> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  for (const auto& o : out) {
    ++r.cases;
    if (o.pass) continue;
    ++r.failed;
    if (r.failures.size() < kListedFailures) r.failures.push_back(o.record);
  }
  return out;
}

LinearSubspace point_of(const BinaryForm& f) { return LinearSubspace::point(f.coeffs()); }

// ---------------------------------------------------------------- binary forms with prescribed border rank

struct ProfileCase {
  int d = 0;
  int b = 0;
  BinaryForm f;
  std::uint64_t seed = 0;
};

constexpr std::uint64_t kProfileStream = 1;
constexpr int kFormsPerProfile = 10;

std::vector<ProfileCase> profile_population(const SuiteOptions& o) {
  std::vector<ProfileCase> out;
  std::uint64_t index = 0;
  for (int d = 4; d <= 10; ++d)
    for (int b = 2; 2 * b <= d; ++b)
      for (int i = 0; i < kFormsPerProfile; ++i) {
        const std::uint64_t seed = case_seed(o, kProfileStream, index++);
        Rng rng(seed);
        out.push_back({d, b, prescribed_profile_form(d, b, rng, o.max_coeff), seed});
      }
  return out;
}

Json profile_record(const ProfileCase& c) { return {{"d", c.d}, {"b", c.b}, {"form", to_json(c.f)}}; }

void suite_a3(SuiteResult& r, const SuiteOptions& o) {
  const auto pop = profile_population(o);
  long max_used = 0;
  auto out = run_cases(r, pop.size(), [&](std::size_t i) {
    const auto& c = pop[i];
    const int t = c.d + 2 - c.b;
    const int budget = default_max_samples(c.d, t);
    WqResult w = non_uniqueness_set(c.f, t, budget, Rng::derive_seed(c.seed, 1), o.max_coeff);
    Outcome res;
    res.pass = w.certified_point && w.subspace == point_of(c.f) && w.samples_used <= budget;
    res.record = profile_record(c);
    res.record["budget"] = budget;
    res.record["samples_used"] = w.samples_used;
    res.record["subspace_dim"] = w.subspace.dim();
    return res;
  });
  for (const auto& x : out) max_used = std::max(max_used, x.record["samples_used"].get<long>());
  r.summary["forms"] = pop.size();
  r.summary["max_samples_used"] = max_used;
}

void suite_a2(SuiteResult& r, const SuiteOptions& o) {
  const auto pop = profile_population(o);
  run_cases(r, pop.size(), [&](std::size_t i) {
    const auto& c = pop[i];
    const RankProfile p = rank_profile(c.f);
    const int fam = family_dimension(c.f);
    const LinearSubspace cactus = cactus_span_intersection(c.f, Rng::derive_seed(c.seed, 2), o.max_coeff);
    Outcome res;
    res.record = profile_record(c);
    res.record["rank"] = p.rank;
    res.record["family_dimension"] = fam;
    res.record["cactus_meet_dim"] = cactus.dim();
    res.pass = p.rank == c.d + 2 - c.b && fam == c.d + 3 - 2 * c.b && cactus == point_of(c.f);
    return res;
  });

  // Generic forms of even degree: rank d/2 + 1 and any two decompositions
  // meet only in F.
  constexpr std::uint64_t kGenericStream = 2;
  constexpr int kGenericPerDegree = 25;
  constexpr int kSamplesPerForm = 3;
  std::vector<int> degrees;
  for (int d = 4; d <= 10; d += 2)
    for (int i = 0; i < kGenericPerDegree; ++i) degrees.push_back(d);
  long pairs = 0;
  auto out = run_cases(r, degrees.size(), [&](std::size_t i) {
    const int d = degrees[i];
    Rng rng(case_seed(o, kGenericStream, i));
    const BinaryForm f = generic_form(d, rng, o.max_coeff);
    Outcome res;
    res.record = {{"d", d}, {"form", to_json(f)}};
    const RankProfile p = rank_profile(f);
    res.record["rank"] = p.rank;
    std::vector<DecompositionSample> samples;
    for (int tries = 0; tries < 200 && samples.size() < kSamplesPerForm; ++tries) {
      auto s = sample_decomposition(f, d / 2 + 1, rng, o.max_coeff);
      if (!s) continue;
      bool fresh = std::none_of(samples.begin(), samples.end(),
                                [&](const DecompositionSample& x) { return proportional(x.generator, s->generator); });
      if (fresh) samples.push_back(std::move(*s));
    }
    bool meets = samples.size() == kSamplesPerForm;
    long checked = 0;
    for (std::size_t a = 0; a < samples.size(); ++a)
      for (std::size_t b = a + 1; b < samples.size(); ++b) {
        ++checked;
        meets = meets && intersect(samples[a].span, samples[b].span) == point_of(f);
      }
    res.record["pairs"] = checked;
    res.pass = p.rank == d / 2 + 1 && meets;
    return res;
  });
  for (const auto& x : out) pairs += x.record["pairs"].get<long>();
  r.summary["profile_forms"] = pop.size();
  r.summary["generic_forms"] = degrees.size();
  r.summary["pairs_checked"] = pairs;
}

// ---------------------------------------------------------------- x^d + y^d

void suite_q1(SuiteResult& r, const SuiteOptions& o) {
  constexpr std::uint64_t kStream = 3;
  constexpr int kDraws = 200;
  std::vector<std::pair<int, int>> grid;
  for (int d = 5; d <= 9; ++d)
    for (int t = 3; t <= d - 1; ++t) grid.emplace_back(d, t);
  auto out = run_cases(r, grid.size(), [&](std::size_t i) {
    const auto [d, t] = grid[i];
    BinaryForm f(d);
    f[0] = 1;
    f[d] = 1;
    const auto amb = static_cast<std::size_t>(d);
    const Vector at_x = BinaryForm::monomial(d, 0).coeffs();  // image of (1:0)
    const Vector at_y = BinaryForm::monomial(d, d).coeffs();  // image of (0:1)
    const LinearSubspace witness_line = LinearSubspace::span(amb, {at_x, at_y});
    Rng rng(case_seed(o, kStream, i));
    long drawn = 0, redundant = 0, independent = 0, attempts = 0;
    while (drawn < kDraws && attempts < 50L * kDraws) {
      ++attempts;
      auto s = sample_decomposition(f, t, rng, o.max_coeff);
      if (!s) continue;
      ++drawn;
      if (!s->irredundant) ++redundant;
      // (1:0) is a root of g exactly when Y divides g, (0:1) when X does.
      std::vector<Vector> shared;
      if (sgn(s->generator[0]) == 0) shared.push_back(at_x);
      if (sgn(s->generator[t]) == 0) shared.push_back(at_y);
      if (intersect(s->span, witness_line) == LinearSubspace::span(amb, shared)) ++independent;
    }
    Outcome res;
    res.record = {{"d", d}, {"t", t}, {"draws", drawn}, {"redundant", redundant}, {"independence_ok", independent}};
    res.pass = drawn == kDraws && redundant == kDraws && independent == kDraws;
    return res;
  });
  long draws = 0;
  for (const auto& x : out) draws += x.record["draws"].get<long>();
  r.summary["grid_points"] = grid.size();
  r.summary["draws"] = draws;
}

// ---------------------------------------------------------------- generic forms, sizes up to d

constexpr int kGenericFormsPerDegree = 5;

std::vector<int> generic_degrees() {
  std::vector<int> out;
  for (int d = 5; d <= 9; ++d)
    for (int i = 0; i < kGenericFormsPerDegree; ++i) out.push_back(d);
  return out;
}

BinaryForm generic_member(const SuiteOptions& o, std::size_t index, int d) {
  constexpr std::uint64_t kStream = 4;
  Rng rng(case_seed(o, kStream, index));
  return generic_form(d, rng, o.max_coeff);
}

void suite_q2(SuiteResult& r, const SuiteOptions& o) {
  const auto degrees = generic_degrees();
  run_cases(r, degrees.size(), [&](std::size_t i) {
    const int d = degrees[i];
    const BinaryForm f = generic_member(o, i, d);
    Outcome res;
    res.pass = lemma_q2_check(f, Rng::derive_seed(o.seed, 100 + i), o.max_coeff);
    res.record = {{"d", d}, {"form", to_json(f)}};
    return res;
  });
  r.summary["forms"] = degrees.size();
}

void suite_q3(SuiteResult& r, const SuiteOptions& o) {
  const int budget = o.samples > 0 ? o.samples : 30;
  const auto degrees = generic_degrees();
  struct Job {
    std::size_t form;
    int d;
    int t;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (int t = (degrees[i] + 2) / 2; t <= degrees[i]; ++t) jobs.push_back({i, degrees[i], t});
  auto out = run_cases(r, jobs.size(), [&](std::size_t j) {
    const Job& job = jobs[j];
    const BinaryForm f = generic_member(o, job.form, job.d);
    WqResult w = non_uniqueness_set(f, job.t, budget, case_seed(o, 5, j), o.max_coeff);
    Outcome res;
    res.record = {{"d", job.d},
                  {"t", job.t},
                  {"form", to_json(f)},
                  {"samples_used", w.samples_used},
                  {"singleton_family", w.singleton_family},
                  {"subspace_dim", w.subspace.dim()}};
    res.pass = w.samples_used > 0 && w.certified_point;
    return res;
  });
  std::map<std::string, long> failing;
  for (const auto& x : out)
    if (!x.pass)
      ++failing["d=" + std::to_string(x.record["d"].get<int>()) + ",t=" + std::to_string(x.record["t"].get<int>())];
  r.summary["runs"] = jobs.size();
  r.summary["budget"] = budget;
  r.summary["failing_by_degree_and_size"] = failing;
  if (!failing.empty())
    r.notes.push_back(
        "for odd d and t = (d+1)/2 a generic form has exactly one decomposition of size t, so the folded "
        "intersection is that span, not a point");
}

// ---------------------------------------------------------------- point configurations

enum class Plant { LineShort, Line, SmoothConic, LinePair, CubicCI, Cubic, General };

const char* plant_name(Plant p) {
  switch (p) {
    case Plant::LineShort: return "line-d+1";
    case Plant::Line: return "line-d+2";
    case Plant::SmoothConic: return "conic-smooth";
    case Plant::LinePair: return "conic-line-pair";
    case Plant::CubicCI: return "cubic-CI";
    case Plant::Cubic: return "cubic-3d+1";
    case Plant::General: return "general";
  }
  return "?";
}

PointSet plant_points(Plant kind, int n, int d, Rng& rng, long h) {
  const auto ud = static_cast<std::size_t>(d);
  PointSet s(n);
  switch (kind) {
    case Plant::LineShort: s = collinear_points(n, ud + 1, rng); break;
    case Plant::Line: s = collinear_points(n, ud + 2, rng); break;
    case Plant::SmoothConic: s = conic_points(n, 2 * ud + 2, rng); break;
    case Plant::LinePair: s = line_pair_points(n, ud + 1, rng); break;
    case Plant::CubicCI: s = cubic_complete_intersection(n, d, rng); break;
    case Plant::Cubic: s = cubic_points(n, 3 * ud + 1, rng); break;
    case Plant::General: break;
  }
  const long room = 4L * d - 5 - static_cast<long>(s.size());
  const long lo = kind == Plant::General ? d + 2 : 0;
  add_general_points(s, static_cast<std::size_t>(rng.uniform(lo, room)), rng, h);
  return s;
}

constexpr int kInstancesPerKind = 100;

void suite_a45(SuiteResult& r, const SuiteOptions& o) {
  constexpr std::uint64_t kStream = 6;
  struct Job {
    int d;
    int n;
    Plant kind;
  };
  std::vector<Job> jobs;
  for (int d : {6, 7})
    for (int n : {2, 3}) {
      std::vector<Plant> kinds{Plant::LineShort, Plant::Line, Plant::Cubic, Plant::General};
      if (n == 2) kinds.push_back(Plant::CubicCI);
      for (Plant k : kinds)
        for (int i = 0; i < kInstancesPerKind; ++i) jobs.push_back({d, n, k});
      // The conic quota is split between smooth conics and line pairs.
      for (int i = 0; i < kInstancesPerKind; ++i) jobs.push_back({d, n, i % 2 ? Plant::LinePair : Plant::SmoothConic});
    }
  auto out = run_cases(r, jobs.size(), [&](std::size_t j) {
    const Job& job = jobs[j];
    Rng rng(case_seed(o, kStream, j));
    const PointSet s = plant_points(job.kind, job.n, job.d, rng, o.max_coeff);
    const H1Report rep = detect_configuration(s, job.d);
    bool ok = rep.witness.has_value() == (rep.h1 > 0);
    auto expect = [&](ConfigKind k) { ok = ok && rep.witness && rep.witness->kind == k; };
    switch (job.kind) {
      case Plant::Line: expect(ConfigKind::Line); break;
      case Plant::SmoothConic:
        expect(ConfigKind::Conic);
        ok = ok && !rep.witness->reducible;
        break;
      case Plant::LinePair:
        expect(ConfigKind::Conic);
        ok = ok && rep.witness->reducible;
        break;
      case Plant::CubicCI: expect(ConfigKind::CubicCompleteIntersection); break;
      case Plant::Cubic: expect(ConfigKind::Cubic); break;
      case Plant::LineShort:
      case Plant::General: break;
    }
    Outcome res;
    res.pass = ok;
    res.record = {{"d", job.d},
                  {"n", job.n},
                  {"planted", plant_name(job.kind)},
                  {"size", s.size()},
                  {"h1", rep.h1},
                  {"witness", rep.witness ? to_string(rep.witness->kind) : "none"}};
    if (!ok) res.record["points"] = to_json(s);
    return res;
  });
  std::map<std::string, long> h1_positive;
  for (const auto& x : out)
    if (x.record["h1"].get<long>() > 0) ++h1_positive[x.record["planted"].get<std::string>()];
  r.summary["instances"] = jobs.size();
  r.summary["h1_positive_by_kind"] = h1_positive;
  r.notes.push_back("line instances are planted with d+2 points; d+1 collinear points impose independent conditions "
                    "in degree d, so those are checked only for detector output iff h1 > 0");
}

// ---------------------------------------------------------------- mixed decompositions

void suite_a43(SuiteResult& r, const SuiteOptions& o) {
  constexpr std::uint64_t kStream = 7;
  constexpr int n = 2, d = 8, kInstances = 3;
  const int samples = o.samples > 0 ? o.samples : 12;
  struct Job {
    int b;
    int k;
  };
  std::vector<Job> jobs;
  for (int b = 2; b <= 4; ++b)
    for (int k = d + 3 - b; k <= 2 * d - 2; ++k)
      for (int i = 0; i < kInstances; ++i) jobs.push_back({b, k});
  auto out = run_cases(r, jobs.size(), [&](std::size_t j) {
    const Job& job = jobs[j];
    const std::uint64_t seed = case_seed(o, kStream, j);
    Outcome res;
    res.record = {{"b", job.b}, {"k", job.k}};
    try {
      MixedInstance inst = mixed_construct(n, d, job.b, job.k, seed, o.max_coeff);
      MixedReport rep = mixed_verify(inst, samples, Rng::derive_seed(seed, 1), o.max_coeff);
      res.pass = rep.pass;
      res.record["part2_asserted"] = rep.part2_asserted;
      res.record["folded_dim"] = rep.folded.dim();
      res.record["expected_dim"] = rep.expected.dim();
      if (!rep.pass) res.record["report"] = to_json(rep);
    } catch (const DegenerateDraw& e) {
      res.record["error"] = e.what();
    }
    return res;
  });
  long containment_only = 0;
  for (const auto& x : out)
    if (x.record.contains("part2_asserted") && !x.record["part2_asserted"].get<bool>()) ++containment_only;
  r.summary["instances"] = jobs.size();
  r.summary["samples"] = samples;
  r.summary["containment_only_instances"] = containment_only;
  r.notes.push_back("k = 2d - 2 lies outside the range of the folded-span claim; those instances check containment only");
  r.notes.push_back("rank(q) <= k holds by construction; rank(q) = k is not certified");
}

// ---------------------------------------------------------------- curves

void suite_i1(SuiteResult& r, const SuiteOptions& o) {
  constexpr std::uint64_t kStream = 8;
  constexpr int kDraws = 50, kAttempts = 20;
  std::vector<ParamCurve> zoo;
  Rng curve_rng(case_seed(o, kStream, 1000));
  for (int rr : {4, 6}) {
    zoo.push_back(rational_normal_curve(rr));
    zoo.push_back(gap_curve(rr));
    zoo.push_back(random_curve(rr, curve_rng));
  }
  auto out = run_cases(r, zoo.size(), [&](std::size_t ci) {
    const ParamCurve& c = zoo[ci];
    const auto half = static_cast<std::size_t>(c.r() / 2 + 1);
    Rng rng(case_seed(o, kStream, ci));
    long attempts = 0, degenerate = 0, built = 0, irredundant = 0, rank_ok = 0, unresolved = 0;
    for (int draw = 0; draw < kDraws; ++draw) {
      bool done = false;
      for (int a = 0; a < kAttempts && !done; ++a) {
        ++attempts;
        std::vector<Scalar> params;
        while (params.size() < 2 * half) {
          Scalar t = Scalar(rng.uniform(-o.max_coeff, o.max_coeff)) / rng.uniform(1, 7);
          if (std::find(params.begin(), params.end(), t) == params.end()) params.push_back(t);
        }
        std::vector<Scalar> s(params.begin(), params.begin() + static_cast<long>(half));
        std::vector<Scalar> a_list(params.begin() + static_cast<long>(half), params.end());
        try {
          SpanPair sp = construct_span_pair(c, s, a_list);
          done = true;
          ++built;
          if (sp.s_irredundant && sp.a_irredundant) ++irredundant;
          if (sp.rnc_rank && *sp.rnc_rank == c.r() / 2 + 1) ++rank_ok;
        } catch (const DegenerateDraw&) {
          ++degenerate;
        }
      }
      if (!done) ++unresolved;
    }
    Outcome res;
    res.record = {{"curve", c.name()}, {"r", c.r()},         {"e", c.e()},
                  {"draws", kDraws},   {"attempts", attempts}, {"degenerate", degenerate},
                  {"built", built},    {"irredundant", irredundant}};
    if (c.is_rational_normal()) res.record["rank_certified"] = rank_ok;
    res.pass = unresolved == 0 && 20 * degenerate <= attempts && 20 * irredundant >= 19L * kDraws &&
               (!c.is_rational_normal() || rank_ok == built);
    return res;
  });
  Json curves = Json::array();
  for (const auto& x : out) curves.push_back(x.record);
  r.summary["curves"] = curves;
  r.notes.push_back(
      "for curves other than the rational normal curve only {q} = <S> ∩ <A> and the irredundancy of S and A are "
      "certified; the intersection over every decomposition and the rank of q are not");
}

struct SuiteEntry {
  const char* id;
  const char* anchor;
  void (*run)(SuiteResult&, const SuiteOptions&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {"a3", "2 <= b, b < d + 2 - b, r(F) = d + 2 - b  =>  W_F = {F}", suite_a3},
      {"a2", "r(F) = d + 2 - b; dim of the family = d + 3 - 2b; cactus spans meet in {F}; generic even d: r(F) = d/2 + 1 "
             "and two decompositions meet in {F}",
       suite_a2},
      {"q1", "F = x^d + y^d, 3 <= t <= d - 1: no irredundant spanning set of size t", suite_q1},
      {"q2", "generic F: an irredundant spanning set of size d exists", suite_q2},
      {"q3", "generic F, floor((d+2)/2) <= t <= d: W_{F,t} = {F}", suite_q3},
      {"a45", "|S| <= 4d - 5: h1(I_S(d)) > 0 iff d + 2 points on a line, 2d + 2 on a conic, 3d + 1 on a plane cubic, "
              "or 3d on a plane cubic cut out by a curve of degree d",
       suite_a45},
      {"a43", "W_q = <nu_d(U) ∪ {q'}>", suite_a43},
      {"i1", "{q} = <S> ∩ <A> with S and A irredundant of size r/2 + 1", suite_i1},
  };
  return entries;
}

const SuiteEntry& lookup(std::string_view id) {
  for (const auto& e : registry())
    if (id == e.id) return e;
  std::string known;
  for (const auto& e : registry()) known += std::string(known.empty() ? "" : ", ") + e.id;
  throw PreconditionError("unknown suite '" + std::string(id) + "'; available: " + known);
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

std::string suite_anchor(std::string_view id) { return lookup(id).anchor; }

SuiteResult run_suite(std::string_view id, const SuiteOptions& options) {
  const SuiteEntry& e = lookup(id);
  SuiteResult r;
  r.id = e.id;
  r.anchor = e.anchor;
  e.run(r, options);
  r.pass = r.cases > 0 && r.failed == 0;
  return r;
}

Json to_json(const SuiteResult& r) {
  return {{"suite", r.id},     {"anchor", r.anchor},   {"pass", r.pass},         {"cases", r.cases},
          {"failed", r.failed}, {"summary", r.summary}, {"failures", r.failures}, {"notes", r.notes}};
}

}  // namespace waringlab
