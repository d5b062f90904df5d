#ifndef RRDEG_PRNG_HPP
#define RRDEG_PRNG_HPP

#include <cstdint>

namespace rrdeg {

/// splitmix64: tiny deterministic generator used for reproducible sampling
/// of objective coefficients. Every solve is fully determined by its seed.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    // modulo bias is irrelevant at the tiny spans used here
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

}  // namespace rrdeg

#endif
