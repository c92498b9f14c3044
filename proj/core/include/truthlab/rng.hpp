#pragma once

#include <cstdint>

namespace truthlab {

// SplitMix64. Used everywhere randomness is needed so that runs are
// bit-reproducible across standard libraries (std distributions are not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n > 0
  uint64_t below(uint64_t n) { return next() % n; }

  // uniform in [lo, hi] inclusive
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

  Rng fork() { return Rng(next()); }

 private:
  uint64_t state_;
};

}  // namespace truthlab
