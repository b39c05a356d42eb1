#include "waringlab/rankengine.hpp"

#include <algorithm>
#include <set>

#include "waringlab/error.hpp"

namespace waringlab {

namespace {

constexpr int kSquarefreeRetries = 64;
constexpr int kStableRounds = 3;
constexpr int kGeneratorRetries = 200;

DualForm random_member(const ApolarSlice& slice, Rng& rng, long max_coeff) {
  while (true) {
    Vector w = rng.vector(slice.dim(), max_coeff);
    DualForm g = slice.combination(w);
    if (!g.is_zero()) return g;
  }
}

}  // namespace

RankProfile rank_profile(const BinaryForm& f) {
  const int d = f.degree();
  if (d < 1) throw PreconditionError("rank_profile: degree must be at least 1");
  if (f.is_zero()) throw PreconditionError("rank_profile: zero form is not a point");
  RankProfile p;
  p.degree = d;
  ApolarSlice slice;
  for (int t = 1; t <= d + 1; ++t) {
    slice = apolar_slice(f, t);
    if (slice.dim() > 0) {
      p.border_rank = t;
      break;
    }
  }
  const int b = p.border_rank;
  p.cactus_rank = b;
  p.z_unique = slice.dim() == 1;
  if (p.z_unique) {
    p.min_generator = slice.basis.front();
    p.rank = squarefree(p.min_generator) ? b : d + 2 - b;
  } else {
    auto member = find_squarefree_member(slice.basis);
    p.min_generator = member ? member->normalized() : slice.basis.front();
    p.rank = member ? b : d + 2 - b;
  }
  return p;
}

DecompositionSample decomposition_from_generator(const BinaryForm& f, const DualForm& g) {
  DecompositionSample s;
  s.size = g.degree();
  s.generator = g.normalized();
  s.span = root_span(g, f.degree());
  s.irredundant = irredundant(g, f);
  return s;
}

namespace {

void check_sample_degree(const BinaryForm& f, int t, int rank) {
  if (t > f.degree()) throw PreconditionError("sample_decomposition: need t <= d");
  if (t < rank)
    throw PreconditionError("sample_decomposition: t = " + std::to_string(t) + " is below the rank " +
                            std::to_string(rank) + "; no decomposition of that size exists");
}

std::optional<DecompositionSample> draw(const BinaryForm& f, const ApolarSlice& slice, Rng& rng, long max_coeff) {
  DualForm g = random_member(slice, rng, max_coeff);
  if (!squarefree(g)) return std::nullopt;
  return decomposition_from_generator(f, g);
}

}  // namespace

std::optional<DecompositionSample> sample_decomposition(const BinaryForm& f, int t, Rng& rng, long max_coeff) {
  check_sample_degree(f, t, rank_profile(f).rank);
  return draw(f, apolar_slice(f, t), rng, max_coeff);
}

std::optional<DecompositionSample> sample_decomposition(const BinaryForm& f, int t, std::uint64_t seed,
                                                        long max_coeff) {
  Rng rng(seed);
  return sample_decomposition(f, t, rng, max_coeff);
}

int default_max_samples(int d, int t) {
  const int codim = d + 1 - t;
  if (codim <= 0) return 10;
  return (d + codim - 1) / codim + 10;
}

WqResult non_uniqueness_set(const BinaryForm& f, int t, int max_samples, std::uint64_t seed, long max_coeff) {
  const int d = f.degree();
  const RankProfile profile = rank_profile(f);
  check_sample_degree(f, t, profile.rank);
  WqResult res;
  res.t = t;
  res.subspace = LinearSubspace::whole(static_cast<std::size_t>(d));
  const LinearSubspace point = LinearSubspace::point(f.coeffs());

  if (profile.on_curve() && t == 1) {
    res.subspace = point;
    res.generators.push_back(profile.min_generator.normalized());
    res.samples_used = 1;
    res.stabilized = res.certified_point = res.singleton_family = true;
    return res;
  }

  const ApolarSlice slice = apolar_slice(f, t);
  if (slice.dim() == 1) {
    res.singleton_family = true;
    const DualForm& g = slice.basis.front();
    if (squarefree(g)) {
      auto s = decomposition_from_generator(f, g);
      res.samples_drawn = 1;
      if (s.irredundant) {
        res.subspace = s.span;
        res.generators.push_back(s.generator);
        res.samples_used = 1;
        res.stabilized = true;
      }
    }
    res.family_exhausted = res.samples_used == 0;
    res.certified_point = res.subspace == point;
    return res;
  }

  Rng rng(seed);
  int unchanged = 0;
  while (res.samples_drawn < max_samples) {
    std::optional<DecompositionSample> s;
    for (int i = 0; i < kSquarefreeRetries && !s; ++i) s = draw(f, slice, rng, max_coeff);
    ++res.samples_drawn;
    if (!s || !s->irredundant) continue;
    LinearSubspace next = res.samples_used == 0 ? s->span : intersect(res.subspace, s->span);
    res.generators.push_back(s->generator);
    unchanged = (res.samples_used > 0 && next == res.subspace) ? unchanged + 1 : 0;
    res.subspace = std::move(next);
    ++res.samples_used;
    if (res.subspace.is_point() || unchanged >= kStableRounds) {
      res.stabilized = true;
      break;
    }
  }
  res.family_exhausted = res.samples_used == 0;
  if (res.family_exhausted) res.subspace = LinearSubspace::whole(static_cast<std::size_t>(d));
  res.certified_point = res.subspace == point;
  return res;
}

LinearSubspace cactus_span_intersection(const BinaryForm& f, std::uint64_t seed, long max_coeff) {
  const RankProfile p = rank_profile(f);
  if (p.rank == p.border_rank)
    throw PreconditionError("cactus_span_intersection: requires rank > border rank");
  const LinearSubspace z_span = root_span(p.min_generator, f.degree());
  Rng rng(seed);
  const ApolarSlice slice = apolar_slice(f, p.rank);
  for (int i = 0; i < kSquarefreeRetries; ++i) {
    if (auto s = draw(f, slice, rng, max_coeff)) return intersect(z_span, s->span);
  }
  throw DegenerateDraw("cactus_span_intersection: no squarefree decomposition drawn");
}

int family_dimension(const BinaryForm& f) {
  const RankProfile p = rank_profile(f);
  const int d = f.degree();
  if (!(p.rank == d + 2 - p.border_rank && p.rank > p.border_rank))
    throw PreconditionError("family_dimension: requires rank = d + 2 - b > b");
  return static_cast<int>(apolar_slice(f, p.rank).dim()) - 1;
}

bool wprime_check(const BinaryForm& f, const WqResult& wq, std::uint64_t seed, long max_coeff) {
  if (!wq.stabilized) throw PreconditionError("wprime_check: result is not stabilized");
  if (wq.subspace.is_point()) return true;
  if (wq.generators.empty()) throw PreconditionError("wprime_check: no recorded samples");
  const int d = f.degree();
  const DualForm& fixed = wq.generators.front();
  const auto basis = wq.subspace.basis_vectors();
  Rng rng(seed);
  std::optional<BinaryForm> o;
  for (int i = 0; i < kSquarefreeRetries && !o; ++i) {
    Vector v(static_cast<std::size_t>(d) + 1);
    for (const auto& b : basis) {
      Scalar c = rng.nonzero_coefficient(max_coeff);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
    }
    BinaryForm cand(std::move(v));
    if (!cand.is_zero() && irredundant(fixed, cand)) o = std::move(cand);
  }
  if (!o) throw DegenerateDraw("wprime_check: every draw fell on a proper-subset span");
  if (rank_profile(*o).rank != rank_profile(f).rank) return false;
  for (const auto& g : wq.generators)
    if (!root_span(g, d).contains(o->coeffs())) return false;
  return true;
}

bool lemma_q2_check(const BinaryForm& f, std::uint64_t seed, long max_coeff) {
  const int d = f.degree();
  Rng rng(seed);
  const ApolarSlice slice = apolar_slice(f, d);
  for (int i = 0; i < kSquarefreeRetries; ++i) {
    auto s = draw(f, slice, rng, max_coeff);
    if (s && s->irredundant && s->span.contains(f.coeffs())) return true;
  }
  return false;
}

// ---------------------------------------------------------------- populations

BinaryForm random_form(int d, Rng& rng, long max_coeff) {
  while (true) {
    BinaryForm f(rng.vector(static_cast<std::size_t>(d) + 1, max_coeff));
    if (!f.is_zero()) return f;
  }
}

BinaryForm generic_form(int d, Rng& rng, long max_coeff) {
  const int b = (d + 2) / 2;
  for (int i = 0; i < kGeneratorRetries; ++i) {
    BinaryForm f = random_form(d, rng, max_coeff);
    const RankProfile p = rank_profile(f);
    if (p.border_rank == b && p.rank == b) return f;
  }
  throw DegenerateDraw("generic_form: no generic form drawn");
}

BinaryForm prescribed_profile_form(int d, int b, Rng& rng, long max_coeff) {
  if (b < 2 || 2 * b > d + 1) throw PreconditionError("prescribed_profile_form: need 2 <= b and 2b <= d + 1");
  for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
    DualForm g0(Vector{0, 0, 1});
    std::set<long> used;
    while (static_cast<int>(used.size()) < b - 2) used.insert(rng.uniform(-max_coeff, max_coeff));
    for (long a : used) g0 = g0 * DualForm(Vector{1, -a});
    const auto basis = root_span(g0, d).basis_vectors();
    Vector v(static_cast<std::size_t>(d) + 1);
    for (const auto& bv : basis) {
      Scalar c = rng.nonzero_coefficient(max_coeff);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * bv[k];
    }
    BinaryForm f(std::move(v));
    if (f.is_zero()) continue;
    const RankProfile p = rank_profile(f);
    if (p.border_rank == b && p.rank == d + 2 - b) return f;
  }
  throw DegenerateDraw("prescribed_profile_form: no form with the requested profile drawn");
}

}  // namespace waringlab
