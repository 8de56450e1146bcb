#include "spacecross/crossing.hpp"

#include <random>

namespace spacecross {

Point3 stereographic_lift(const Point3& x, const Point3& c, const Rational& r) {
  Rational wx = x.x - c.x;
  Rational wy = x.y - c.y;
  Rational s = wx * wx + wy * wy;
  Rational four_r2 = 4 * r * r;
  Rational lam = four_r2 / (s + four_r2);
  return {c.x + lam * wx, c.y + lam * wy, 2 * r * s / (s + four_r2)};
}

SpatialDrawing lift_to_sphere(const SpatialDrawing& planar, const LiftParams& p) {
  if (p.subdivision < 1) throw ValidationError("subdivision must be at least 1");
  if (!planar.straight()) throw ValidationError("lift expects a straight-line drawing");
  const int n = planar.graph.n();
  for (int v = 0; v < n; ++v)
    if (sgn(planar.positions[v].z) != 0) throw ValidationError("vertex " + std::to_string(v) + " is off z = 0");

  Point3 c{0, 0, 0};
  Rational diam = 1;
  if (n > 0) {
    Rational x0 = planar.positions[0].x, x1 = x0, y0 = planar.positions[0].y, y1 = y0;
    for (const auto& q : planar.positions) {
      x0 = std::min(x0, q.x);
      x1 = std::max(x1, q.x);
      y0 = std::min(y0, q.y);
      y1 = std::max(y1, q.y);
    }
    c = {(x0 + x1) / 2, (y0 + y1) / 2, 0};
    diam = std::max(x1 - x0, y1 - y0);
    if (sgn(diam) == 0) diam = 1;
  }
  const Rational radius = pow2(16) * diam;
  const Rational jitter = pow2(-40) * radius;

  SpatialDrawing out;
  out.graph = planar.graph;
  for (const auto& q : planar.positions) out.positions.push_back(stereographic_lift(q, c, radius));

  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<long> unit(-1024, 1024);
  for (const auto& e : planar.graph.edges()) {
    const Point3& a = planar.positions[e.u];
    const Point3& b = planar.positions[e.v];
    std::vector<Point3> bends;
    for (int j = 1; j < p.subdivision; ++j) {
      Rational t(j, p.subdivision);
      t.canonicalize();
      Point3 x = a + t * (b - a);
      x.x += jitter * unit(rng) / 1024;
      x.y += jitter * unit(rng) / 1024;
      bends.push_back(stereographic_lift(x, c, radius));
    }
    out.bends.push_back(std::move(bends));
  }
  out.validate();
  return out;
}

}  // namespace spacecross
