#pragma once

#include "spacecross/stair.hpp"

#include <random>

namespace stairchecks {

using spacecross::Point3;
using spacecross::Rational;

// Parameter in (0, 1] spread over many scales: u * 2^-e with e up to max_bits,
// so that points near either end of huge segments get sampled too.
inline Rational spread_unit(std::mt19937_64& rng, long max_bits) {
  std::uniform_int_distribution<long> num(1, 1024);
  Rational u(num(rng), 1024);
  u.canonicalize();
  std::uniform_int_distribution<int> coin(0, 3);
  const int c = coin(rng);
  if (c == 0) return u;
  std::uniform_int_distribution<long> e(0, max_bits);
  Rational t = u * spacecross::pow2(-e(rng));
  return c == 1 ? t : Rational(1 - t);
}

inline Point3 along(const Point3& a, const Point3& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
}

struct ClosenessResult {
  int samples = 0;
  int failures = 0;
};

// Points on random grid segments ab must be 1-close to sigma(a, b), and points
// on sigma(a, b) must be 1-close to ab. Each sample tests one direction.
inline ClosenessResult closeness_samples(const spacecross::StretchedGrid& g, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> idx(1, g.n());
  long max_bits = 1;
  for (int c = 0; c < 3; ++c)
    max_bits = std::max<long>(max_bits, static_cast<long>(mpz_sizeinbase(g.coord(c, g.n()).get_num_mpz_t(), 2)));
  ClosenessResult res;
  while (res.samples < samples) {
    Point3 a = g.point({idx(rng), idx(rng), idx(rng)});
    Point3 b = g.point({idx(rng), idx(rng), idx(rng)});
    if (a == b) continue;
    const auto path = spacecross::stair_path({a.x, a.y, a.z}, {b.x, b.y, b.z});
    const Rational t = spread_unit(rng, max_bits);
    bool ok;
    if (res.samples % 2 == 0) {
      ok = spacecross::close_to_stair_path(g, along(a, b, t), path);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, path.segments.size() - 1);
      const auto& s = path.segments[pick(rng)];
      Point3 from{s.from[0], s.from[1], s.from[2]}, to{s.to[0], s.to[1], s.to[2]};
      ok = spacecross::close_to_segment(g, along(from, to, t), a, b);
    }
    ++res.samples;
    if (!ok) ++res.failures;
  }
  return res;
}

}  // namespace stairchecks
