#pragma once

#include "spacecross/geometry.hpp"

#include <random>

namespace testutil {

using spacecross::Point3;
using spacecross::Rational;

// Uniform rational in [0, 1] with denominator at most `den`.
inline Rational random_unit(std::mt19937_64& rng, long den = 64) {
  std::uniform_int_distribution<long> dq(1, den);
  long q = dq(rng);
  std::uniform_int_distribution<long> dp(0, q);
  Rational r(dp(rng), q);
  r.canonicalize();
  return r;
}

inline Point3 random_point(std::mt19937_64& rng, long den = 64) {
  return {random_unit(rng, den), random_unit(rng, den), random_unit(rng, den)};
}

inline spacecross::Segment3 random_segment(std::mt19937_64& rng, long den = 64) {
  spacecross::Segment3 s{random_point(rng, den), random_point(rng, den)};
  while (s.p == s.q) s.q = random_point(rng, den);
  return s;
}

inline Point3 P(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

}  // namespace testutil
