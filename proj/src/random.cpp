#include "waringlab/random.hpp"

#include "waringlab/error.hpp"

namespace waringlab {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw PreconditionError("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Scalar Rng::nonzero_coefficient(long h) {
  if (h < 1) throw PreconditionError("Rng::nonzero_coefficient: bound must be positive");
  long x = uniform(1, 2 * h);
  return Scalar(x <= h ? x : h - x);
}

Vector Rng::vector(std::size_t n, long h) {
  Vector v(n);
  for (auto& x : v) x = coefficient(h);
  return v;
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace waringlab
