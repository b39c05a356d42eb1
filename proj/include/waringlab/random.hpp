#pragma once

#include <cstdint>
#include <random>

#include "waringlab/exactlin.hpp"

namespace waringlab {

/// Reproducible pseudo-random source: std::mt19937_64 (its output sequence
/// is fixed by the C++ standard) with an in-house bounded draw, so streams
/// agree across standard libraries.
class Rng {
 public:
  static constexpr long kDefaultMaxCoeff = 50;

  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform on [lo, hi] by rejection sampling.
  long uniform(long lo, long hi);
  /// Uniform integer in [-h, h].
  Scalar coefficient(long h) { return Scalar(uniform(-h, h)); }
  /// Uniform integer in [-h, h] \ {0}.
  Scalar nonzero_coefficient(long h);
  Vector vector(std::size_t n, long h);

  /// Independent child stream; the same (seed, stream) always gives the
  /// same child.
  Rng fork(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace waringlab
