// Command-line front end: every subcommand prints one JSON report and exits
// 0 exactly when the report passes (2 on bad input).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "waringlab/error.hpp"
#include "waringlab/suites.hpp"

using namespace waringlab;

namespace {

struct Common {
  std::uint64_t seed = 7;
  int samples = 0;
  std::string json_path;
  long max_coeff = Rng::kDefaultMaxCoeff;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--samples", c.samples, "Sample budget (0: command default)");
  app->add_option("--json", c.json_path, "Also write the report to this file");
  app->add_option("--max-coeff", c.max_coeff, "Bound on random integer coefficients")->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Scalar> parse_list(const std::string& text) {
  std::vector<Scalar> out;
  std::string_view rest(text);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    out.push_back(parse_scalar(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

int emit(Report& r, const Common& c, std::chrono::steady_clock::time_point start) {
  r.seed = c.seed;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const std::string text = to_json(r).dump(2) + "\n";
  std::cout << text;
  if (!c.json_path.empty()) {
    std::ofstream out(c.json_path);
    if (!out) throw ParseError("cannot write " + c.json_path);
    out << text;
  }
  return r.pass ? 0 : 1;
}

Report rank_profile_report(const std::string& form) {
  Report r;
  r.command = "rank-profile";
  r.anchor = anchors::kRankProfile;
  r.inputs = {{"form", form}};
  const BinaryForm f = parse_binary_form(form);
  r.outputs = to_json(rank_profile(f));
  r.pass = true;
  return r;
}

Report wq_report(const std::string& form, int t, const Common& c) {
  Report r;
  r.command = "wq";
  r.anchor = anchors::kNonUniqueness;
  const BinaryForm f = parse_binary_form(form);
  const RankProfile p = rank_profile(f);
  if (t <= 0) t = p.rank;
  const int budget = c.samples > 0 ? c.samples : default_max_samples(f.degree(), std::min(t, f.degree()));
  r.inputs = {{"form", form}, {"t", t}, {"samples", budget}, {"max_coeff", c.max_coeff}};
  const WqResult w = non_uniqueness_set(f, t, budget, c.seed, c.max_coeff);
  r.outputs = to_json(w);
  r.outputs["profile"] = to_json(p);
  r.pass = w.certified_point;
  if (w.family_exhausted) r.outputs["reason"] = "no irredundant decomposition of this size was drawn";
  else if (!w.certified_point) r.outputs["reason"] = "the folded intersection is larger than the point";
  return r;
}

Report verify_report(const std::string& suite, const Common& c) {
  Report r;
  r.command = "verify";
  r.anchor = suite_anchor(suite);
  SuiteOptions o;
  o.seed = c.seed;
  o.max_coeff = c.max_coeff;
  o.samples = c.samples;
  r.inputs = {{"suite", suite}, {"samples", c.samples}, {"max_coeff", c.max_coeff}};
  const SuiteResult s = run_suite(suite, o);
  r.outputs = to_json(s);
  r.pass = s.pass;
  return r;
}

Report a43_report(int n, int d, int b, int k, const Common& c) {
  Report r;
  r.command = "a43";
  r.anchor = suite_anchor("a43");
  const int samples = c.samples > 0 ? c.samples : 12;
  r.inputs = {{"n", n}, {"d", d}, {"b", b}, {"k", k}, {"samples", samples}, {"max_coeff", c.max_coeff}};
  const MixedInstance inst = mixed_construct(n, d, b, k, c.seed, c.max_coeff);
  const MixedReport rep = mixed_verify(inst, samples, Rng::derive_seed(c.seed, 1), c.max_coeff);
  r.outputs = {{"instance", to_json(inst)}, {"verification", to_json(rep)}};
  r.pass = rep.pass;
  return r;
}

Report h1_report(const std::string& path, int n, int d) {
  Report r;
  r.command = "h1";
  r.anchor = suite_anchor("a45");
  r.inputs = {{"file", path}, {"d", d}};
  const PointSet s = parse_point_set(read_file(path));
  if (n > 0 && s.n() != n)
    throw ParseError("points have " + std::to_string(s.n() + 1) + " coordinates, expected " + std::to_string(n + 1));
  r.inputs["n"] = s.n();
  r.inputs["points"] = s.size();
  H1Report rep;
  std::string note;
  if (static_cast<long>(s.size()) > 4L * d - 5 || d < 6) {
    rep = h_values(s, d);
    rep.search_skipped = true;
    note = d < 6 ? "configuration search needs d >= 6" : "configuration search needs |S| <= 4d - 5";
  } else {
    rep = detect_configuration(s, d);
  }
  r.outputs = to_json(rep);
  if (!note.empty()) r.outputs["note"] = note;
  r.pass = rep.search_skipped || rep.witness.has_value() == (rep.h1 > 0);
  return r;
}

Report qsa_report(const std::string& curve, const std::string& curve_file, int rr, const std::string& s_text,
                  const std::string& a_text, const Common& c) {
  Report r;
  r.command = "qsa";
  r.anchor = anchors::kSpanPair;
  Rng rng(c.seed);
  ParamCurve pc = [&] {
    if (!curve_file.empty()) return parse_curve(read_file(curve_file));
    if (curve == "rnc") return rational_normal_curve(rr);
    if (curve == "gap") return gap_curve(rr);
    if (curve == "random") return random_curve(rr, rng);
    throw ParseError("unknown curve '" + curve + "'; use rnc, gap, random or --curve-file");
  }();
  const auto half = static_cast<std::size_t>(pc.r() / 2 + 1);
  std::vector<Scalar> s = s_text.empty() ? std::vector<Scalar>{} : parse_list(s_text);
  std::vector<Scalar> a = a_text.empty() ? std::vector<Scalar>{} : parse_list(a_text);
  // Missing lists are drawn from the seed, avoiding the given parameters.
  auto fill = [&](std::vector<Scalar>& list) {
    if (!list.empty()) return;
    while (list.size() < half) {
      Scalar t = Scalar(rng.uniform(-c.max_coeff, c.max_coeff)) / rng.uniform(1, 7);
      bool used = std::find(s.begin(), s.end(), t) != s.end() || std::find(a.begin(), a.end(), t) != a.end();
      if (!used) list.push_back(t);
    }
  };
  fill(s);
  fill(a);
  r.inputs = {{"curve", to_json(pc)}, {"s", to_json(Vector(s))}, {"a", to_json(Vector(a))}};
  const SpanPair sp = construct_span_pair(pc, s, a);
  r.outputs = to_json(sp);
  r.pass = sp.s_irredundant && sp.a_irredundant && (!sp.rnc_rank || *sp.rnc_rank == pc.r() / 2 + 1);
  if (!pc.is_rational_normal())
    r.outputs["note"] =
        "only {q} = <S> ∩ <A> and the irredundancy of S and A are certified; the intersection over every "
        "decomposition and the rank of q are not";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank and decomposition checks for binary forms and Veronese varieties"};
  app.require_subcommand(1);
  Common common;

  std::string form;
  auto* rp = app.add_subcommand("rank-profile", "Border, cactus and Waring rank of a binary form");
  rp->add_option("form", form, "Form as d:c0,...,cd (coefficient of x^(d-i) y^i)")->required();
  add_common(rp, common);

  int t = 0;
  auto* wq = app.add_subcommand("wq", "Intersect the spans of sampled irredundant decompositions");
  wq->add_option("form", form, "Form as d:c0,...,cd")->required();
  wq->add_option("--t", t, "Decomposition size (default: the rank)");
  add_common(wq, common);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite id")->required();
  add_common(verify, common);

  int n = 2, d = 8, b = 2, k = 10;
  auto* a43 = app.add_subcommand("a43", "Build and check a mixed decomposition in a Veronese variety");
  a43->add_option("--n", n)->capture_default_str();
  a43->add_option("--d", d)->capture_default_str();
  a43->add_option("--b", b)->capture_default_str();
  a43->add_option("--k", k)->capture_default_str();
  add_common(a43, common);

  std::string points_file;
  int h1_n = 0, h1_d = 6;
  auto* h1 = app.add_subcommand("h1", "h^0, h^1 of a point set and its special subsets");
  h1->add_option("file", points_file, "One point a0:a1:...:an per line")->required();
  h1->add_option("--n", h1_n, "Expected ambient dimension (default: from the file)");
  h1->add_option("--d", h1_d, "Degree")->capture_default_str();
  add_common(h1, common);

  std::string curve = "rnc", curve_file, s_params, a_params;
  int rr = 4;
  auto* qsa = app.add_subcommand("qsa", "Intersect the spans of two disjoint point sets on a curve");
  qsa->add_option("--curve", curve, "rnc, gap or random")->capture_default_str();
  qsa->add_option("--curve-file", curve_file, "Curve file: `r e`, then r+1 coefficient lines");
  qsa->add_option("--r", rr, "Ambient dimension (even)")->capture_default_str();
  qsa->add_option("--s", s_params, "Comma-separated parameters t of the points (1:t)");
  qsa->add_option("--a", a_params, "Comma-separated parameters of the second set");
  add_common(qsa, common);

  CLI11_PARSE(app, argc, argv);
  const auto start = std::chrono::steady_clock::now();
  try {
    Report r;
    if (*rp) r = rank_profile_report(form);
    else if (*wq) r = wq_report(form, t, common);
    else if (*verify) r = verify_report(suite, common);
    else if (*a43) r = a43_report(n, d, b, k, common);
    else if (*h1) r = h1_report(points_file, h1_n, h1_d);
    else r = qsa_report(curve, curve_file, rr, s_params, a_params, common);
    return emit(r, common, start);
  } catch (const Error& e) {
    std::cerr << "waringlab: " << e.what() << "\n";
    return 2;
  }
}
