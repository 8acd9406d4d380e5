#pragma once

#include <cstdint>
#include <random>

#include "mck/rational.hpp"

namespace mck {

// Deterministic seeded randomness for zero tests and parameter draws.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  long uniform_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  // p/q with 1 <= p, q <= height (positive).
  Rational rand_rational(long height) {
    return Rational(uniform_int(1, height), uniform_int(1, height));
  }

  // Nonzero signed rational of height <= height, never equal to 0, 1 or -1
  // (keeps q-series parameter draws away from degenerate bases).
  Rational rand_param(long height) {
    for (;;) {
      long p = uniform_int(1, height), q = uniform_int(1, height);
      if (p == q) continue;
      Rational r(p, q);
      if (uniform_int(0, 1)) r = -r;
      return r;
    }
  }

  bool coin() { return uniform_int(0, 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mck
