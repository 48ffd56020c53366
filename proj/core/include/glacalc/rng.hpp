#ifndef GLACALC_RNG_HPP
#define GLACALC_RNG_HPP

#include <cstdint>

#include "glacalc/rational.hpp"

namespace glacalc {

/// Deterministic, platform-independent pseudo-random stream (splitmix64).
/// Randomized validation must produce identical reports for a given seed
/// on every platform, so the standard-library distributions are avoided.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [0, n); n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  /// Uniform-ish integer in [lo, hi].
  int in_range(int lo, int hi) { return lo + below(hi - lo + 1); }
};

/// Random polynomial of total degree <= 2 with integer coefficients in
/// [-3, 3] (possibly zero).
Poly random_poly(SplitMix64& rng, int vars);

/// Same, but guaranteed nonzero.
Poly random_poly_nonzero(SplitMix64& rng, int vars);

}  // namespace glacalc

#endif
