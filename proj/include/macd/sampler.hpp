#pragma once

#include <cstdint>

#include "macd/rational.hpp"

namespace macd {

/// Platform-stable deterministic generator (splitmix64). The standard
/// distributions are not bit-stable across library implementations, so the
/// bounded draw is done by plain modulo here.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d649bb133111ebull;
    return z ^ (z >> 31);
  }
  long bounded(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

struct ParamDraw {
  Rational Q, Ts, Tl;
};

/// Seeded rational parameter draws for identity testing: reduced fractions
/// a/b with 2 <= a < b <= 97, pairwise distinct, all inside (0,1).
class ParamSampler {
 public:
  explicit ParamSampler(uint64_t seed) : rng_(seed ^ 0xa02bdbf7bb3c0a7ull) {}

  Rational fraction() {
    for (;;) {
      long b = rng_.bounded(3, 97);
      long a = rng_.bounded(2, b - 1);
      Rational r(a, b);
      if (r.num() >= 2) return r;  // stays reduced with numerator >= 2
    }
  }

  ParamDraw generic() {
    ParamDraw d;
    d.Q = fraction();
    do { d.Ts = fraction(); } while (d.Ts == d.Q);
    do { d.Tl = fraction(); } while (d.Tl == d.Q || d.Tl == d.Ts);
    return d;
  }

  Rational q_only() { return fraction(); }

 private:
  SplitMix64 rng_;
};

}  // namespace macd
