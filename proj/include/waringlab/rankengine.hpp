#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "waringlab/binform.hpp"
#include "waringlab/random.hpp"

namespace waringlab {

/// Border, cactus and Waring rank of a binary form with respect to the
/// rational normal curve, plus the minimal apolar generator.
struct RankProfile {
  int degree = 0;
  int border_rank = 0;
  /// Always equal to border_rank on the rational normal curve.
  int cactus_rank = 0;
  int rank = 0;
  /// Generator of I(F) in degree border_rank; its divisor is the minimal
  /// scheme Z. Unique up to scalar when z_unique.
  DualForm min_generator;
  bool z_unique = false;

  bool on_curve() const { return rank == 1; }
};

/// Sylvester's rule: b is the first degree with a nonzero apolar slice and
/// the rank is b when that slice has a squarefree member, d + 2 - b
/// otherwise. Throws PreconditionError for the zero form or degree 0.
RankProfile rank_profile(const BinaryForm& f);

/// A point set S with |S| = t and F ∈ ⟨S⟩, given implicitly by its
/// vanishing form.
struct DecompositionSample {
  int size = 0;
  DualForm generator;
  LinearSubspace span;
  bool irredundant = false;
};

/// Builds the sample for a squarefree apolar generator.
DecompositionSample decomposition_from_generator(const BinaryForm& f, const DualForm& g);

/// Draws one element of I(F)_t with coefficients in [-max_coeff, max_coeff]
/// against the slice basis. Returns nullopt when the draw is not squarefree.
/// Throws PreconditionError if t < rank(F) or t > d.
std::optional<DecompositionSample> sample_decomposition(const BinaryForm& f, int t, Rng& rng,
                                                        long max_coeff = Rng::kDefaultMaxCoeff);
std::optional<DecompositionSample> sample_decomposition(const BinaryForm& f, int t, std::uint64_t seed,
                                                        long max_coeff = Rng::kDefaultMaxCoeff);

/// Intersection of the spans of sampled irredundant decompositions of size t.
struct WqResult {
  int t = 0;
  LinearSubspace subspace;
  /// Irredundant samples folded into the intersection.
  int samples_used = 0;
  /// Squarefree samples drawn, irredundant or not.
  int samples_drawn = 0;
  bool stabilized = false;
  /// subspace == ⟨F⟩; then the non-uniqueness set is exactly {F}.
  bool certified_point = false;
  /// No irredundant sample was found within the budget. The subspace is
  /// then the whole space.
  bool family_exhausted = false;
  /// I(F)_t is one-dimensional, so the family has at most one member.
  bool singleton_family = false;
  std::vector<DualForm> generators;
};

/// ⌈d / (d + 1 - t)⌉ + 10: each span has codimension d + 1 - t.
int default_max_samples(int d, int t);

/// Folds spans of irredundant samples until the intersection is a point or
/// has been unchanged for three consecutive samples, or max_samples
/// squarefree samples have been drawn. The result always contains the true
/// set, so a point result certifies it.
WqResult non_uniqueness_set(const BinaryForm& f, int t, int max_samples, std::uint64_t seed,
                            long max_coeff = Rng::kDefaultMaxCoeff);

/// ⟨Z⟩ ∩ ⟨S⟩ for the minimal scheme Z and one sampled S of minimal size.
/// Requires rank(F) > border rank.
LinearSubspace cactus_span_intersection(const BinaryForm& f, std::uint64_t seed,
                                        long max_coeff = Rng::kDefaultMaxCoeff);

/// Projective dimension of I(F)_{d+2-b}, the dimension of the family of
/// minimal decompositions. Requires rank(F) = d + 2 - b > b.
int family_dimension(const BinaryForm& f);

/// Picks o in the stabilized subspace off the proper-subset spans of the
/// first recorded sample and checks that o has the rank of F and lies in
/// every recorded span. Vacuously true for a point.
bool wprime_check(const BinaryForm& f, const WqResult& wq, std::uint64_t seed,
                  long max_coeff = Rng::kDefaultMaxCoeff);

/// Looks for an irredundant decomposition of size d.
bool lemma_q2_check(const BinaryForm& f, std::uint64_t seed, long max_coeff = Rng::kDefaultMaxCoeff);

// ---------------------------------------------------------------- populations

/// Uniform random coefficients; not checked for anything.
BinaryForm random_form(int d, Rng& rng, long max_coeff = Rng::kDefaultMaxCoeff);

/// Random form accepted only with the generic profile b = rank = ⌊(d+2)/2⌋.
BinaryForm generic_form(int d, Rng& rng, long max_coeff = Rng::kDefaultMaxCoeff);

/// Random element of the kernel of contraction by Y^2 ∏(X - a_i Y),
/// accepted only if its profile is (b, d + 2 - b). Requires 2 <= b and
/// 2b <= d + 1.
BinaryForm prescribed_profile_form(int d, int b, Rng& rng, long max_coeff = Rng::kDefaultMaxCoeff);

}  // namespace waringlab
