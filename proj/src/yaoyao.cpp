#include "spacecross/yaoyao.hpp"

#include "spacecross/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace spacecross {

void PointMultiset::validate() const {
  if (dim < 1) throw ValidationError("multiset dimension must be positive");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (static_cast<int>(points[i].size()) != dim)
      throw ValidationError("point " + std::to_string(i) + " has dimension " + std::to_string(points[i].size()) +
                            ", expected " + std::to_string(dim));
}

namespace {

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

Rational cross(const BlockPoint& a, const BlockPoint& b) { return cross(a[0], a[1], b[0], b[1]); }

BlockPoint minus(const BlockPoint& a, const BlockPoint& b) {
  BlockPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Coordinates of d in the basis (ga, gb).
std::pair<Rational, Rational> cone_coords(const BlockPoint& ga, const BlockPoint& gb, const BlockPoint& d) {
  const Rational den = cross(ga, gb);
  return {cross(d, gb) / den, cross(ga, d) / den};
}

Rational median_of(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  Rational m = (v[(n - 1) / 2] + v[n / 2]) / 2;
  return m;
}

YaoYaoPartition build_1d(const PointMultiset& F) {
  std::vector<Rational> xs;
  for (const auto& p : F.points) xs.push_back(p[0]);
  YaoYaoPartition out;
  out.dim = 1;
  out.center = {median_of(xs)};
  out.generators = {{Rational(1)}, {Rational(-1)}};
  out.cells = {{{0}, {0, 1}, {}}, {{1}, {0, 2}, {}}};
  return out;
}

// Sign of cross(u, p - q) for every point, with a double filter.
struct LineTest {
  const std::vector<std::array<double, 2>>& approx;
  const PointMultiset& F;

  int side(const BlockPoint& q, const BlockPoint& u, const std::array<double, 2>& qd,
           const std::array<double, 2>& ud, int i) const {
    const double a = ud[0] * (approx[i][1] - qd[1]);
    const double b = ud[1] * (approx[i][0] - qd[0]);
    const double v = a - b;
    if (std::fabs(v) > 1e-9 * (std::fabs(a) + std::fabs(b)) + 1e-300) return v > 0 ? 1 : -1;
    const auto& p = F.points[i];
    return sgn(cross(u[0], u[1], p[0] - q[0], p[1] - q[1]));
  }
};

std::optional<YaoYaoPartition> build_2d(const PointMultiset& F) {
  const int n = F.size();
  std::vector<Rational> ys;
  for (const auto& p : F.points) ys.push_back(p[1]);
  const Rational ym = median_of(ys);
  std::vector<int> level(n);  // +1 above the median line, -1 below, 0 on it
  for (int i = 0; i < n; ++i) level[i] = sgn(F.points[i][1] - ym);
  std::vector<std::array<double, 2>> approx(n);
  for (int i = 0; i < n; ++i) approx[i] = {F.points[i][0].get_d(), F.points[i][1].get_d()};
  const LineTest test{approx, F};

  // cells: 0 = up & right, 1 = up & left, 2 = down & left, 3 = down & right of the upward line
  auto valid = [&](const BlockPoint& q, const BlockPoint& u) {
    const std::array<double, 2> qd{q[0].get_d(), q[1].get_d()}, ud{u[0].get_d(), u[1].get_d()};
    int count[4] = {0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
      const int s = test.side(q, u, qd, ud, i);
      const bool up = level[i] >= 0, down = level[i] <= 0, right = s <= 0, left = s >= 0;
      count[0] += up && right;
      count[1] += up && left;
      count[2] += down && left;
      count[3] += down && right;
    }
    for (int c : count)
      if (4 * c < n) return false;
    return true;
  };

  std::optional<std::pair<BlockPoint, BlockPoint>> found;
  const BlockPoint vertical{Rational(0), Rational(1)};
  for (int i = 0; i < n && !found; ++i)
    if (valid(F.points[i], vertical)) found.emplace(F.points[i], vertical);
  for (int i = 0; i < n && !found; ++i)
    for (int j = i + 1; j < n && !found; ++j) {
      BlockPoint u = minus(F.points[j], F.points[i]);
      if (sgn(u[1]) == 0) continue;
      if (sgn(u[1]) < 0) u = {-u[0], -u[1]};
      if (valid(F.points[i], u)) found.emplace(F.points[i], u);
    }
  if (!found) return std::nullopt;

  const auto& [q, u] = *found;
  YaoYaoPartition out;
  out.dim = 2;
  const Rational t = (ym - q[1]) / u[1];
  out.center = {q[0] + t * u[0], ym};
  out.generators = {{Rational(1), Rational(0)}, u, {Rational(-1), Rational(0)}, {-u[0], -u[1]}};
  for (int c = 0; c < 4; ++c) out.cells.push_back({{c, (c + 1) % 4}, {0, 1 + c, 1 + (c + 1) % 4}, {}});
  return out;
}

void finish(YaoYaoPartition& p, const PointMultiset& F) {
  p.scale = 1;  // barycentric() returns raw cone coordinates while this is 1
  Rational far = 1;
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c)
    for (int i = 0; i < F.size(); ++i) {
      if (!p.in_cell(c, F.points[i])) continue;
      p.cells[c].members.push_back(i);
      const auto w = p.barycentric(c, F.points[i]);
      Rational reach = 0;
      for (std::size_t v = 1; v < w.size(); ++v) reach += w[v];
      if (reach > far) far = reach;
    }
  p.scale = far;
  p.vertices = {p.center};
  for (const auto& g : p.generators) {
    BlockPoint v(p.dim);
    for (int k = 0; k < p.dim; ++k) v[k] = p.center[k] + p.scale * g[k];
    p.vertices.push_back(std::move(v));
  }
}

}  // namespace

bool YaoYaoPartition::in_cell(int cell, const BlockPoint& p) const {
  const BlockPoint d = minus(p, center);
  const auto& gs = cells[cell].generators;
  if (dim == 1) return sgn(d[0]) * sgn(generators[gs[0]][0]) >= 0;
  const auto [a, b] = cone_coords(generators[gs[0]], generators[gs[1]], d);
  return sgn(a) >= 0 && sgn(b) >= 0;
}

std::vector<Rational> YaoYaoPartition::barycentric(int cell, const BlockPoint& p) const {
  const BlockPoint d = minus(p, center);
  const auto& gs = cells[cell].generators;
  const Rational s = sgn(scale) > 0 ? scale : Rational(1);
  if (dim == 1) {
    const Rational a = d[0] / generators[gs[0]][0] / s;
    return {1 - a, a};
  }
  auto [a, b] = cone_coords(generators[gs[0]], generators[gs[1]], d);
  a /= s;
  b /= s;
  return {1 - a - b, a, b};
}

PointMultiset perturb_multiset(const PointMultiset& F) {
  if (F.dim != 2) throw ValidationError("perturbation is defined for planar multisets");
  PointMultiset out = F;
  const Rational eps = pow2(-64);
  for (int i = 0; i < F.size(); ++i) {
    const Rational e = eps * (i + 1);
    out.points[i][0] += e;
    out.points[i][1] += e * e;
  }
  return out;
}

bool cells_cover_space(const YaoYaoPartition& p) {
  if (p.dim == 1)
    return p.generators.size() == 2 && sgn(p.generators[0][0]) != 0 &&
           sgn(p.generators[0][0]) == -sgn(p.generators[1][0]) && p.cells.size() == 2;
  const int g = static_cast<int>(p.generators.size());
  if (g != 4 || p.cells.size() != 4) return false;
  // consecutive turns in (0, pi) with four generators wind exactly once
  for (int i = 0; i < g; ++i)
    if (sgn(cross(p.generators[i], p.generators[(i + 1) % g])) <= 0) return false;
  for (int c = 0; c < 4; ++c)
    if (p.cells[c].generators != std::vector<int>{c, (c + 1) % 4}) return false;
  return true;
}

bool cells_meet_count(const YaoYaoPartition& p, const PointMultiset& F) {
  const int need_den = p.dim == 1 ? 2 : 4;
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    int count = 0;
    for (const auto& q : F.points) count += p.in_cell(c, q);
    if (count * need_den < F.size()) return false;
  }
  return true;
}

bool halfspace_property(const YaoYaoPartition& p) {
  // halfspace {x : a.(x - center) <= 0} contains cell iff a.g <= 0 on its generators
  auto dot = [](const BlockPoint& a, const BlockPoint& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  auto contains_cell = [&](const BlockPoint& a) {
    for (const auto& cell : p.cells) {
      bool all = true;
      for (int g : cell.generators) all = all && sgn(dot(a, p.generators[g])) <= 0;
      if (all) return true;
    }
    return false;
  };
  if (p.dim == 1) return contains_cell({Rational(1)}) && contains_cell({Rational(-1)});

  // the containment pattern only changes where a is normal to a generator
  std::vector<BlockPoint> normals;
  for (const auto& g : p.generators) {
    normals.push_back({-g[1], g[0]});
    normals.push_back({g[1], -g[0]});
  }
  auto half = [](const BlockPoint& v) { return sgn(v[1]) > 0 || (sgn(v[1]) == 0 && sgn(v[0]) > 0) ? 0 : 1; };
  std::sort(normals.begin(), normals.end(), [&](const BlockPoint& a, const BlockPoint& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return sgn(cross(a, b)) > 0;
  });
  const int m = static_cast<int>(normals.size());
  for (int i = 0; i < m; ++i) {
    const auto& a = normals[i];
    const auto& b = normals[(i + 1) % m];
    if (!contains_cell(a)) return false;
    // a + b lies strictly between a and b when they are less than pi apart
    if (sgn(cross(a, b)) > 0 && !contains_cell({a[0] + b[0], a[1] + b[1]})) return false;
  }
  return true;
}

YaoYaoPartition yao_yao_partition(const PointMultiset& F, const YaoYaoOptions& opt) {
  F.validate();
  if (F.dim != 1 && F.dim != 2) throw PreconditionViolated("Yao-Yao partitions are implemented for d = 1, 2");
  const int need = F.dim == 1 ? 2 : 4;
  if (F.size() < need)
    throw PreconditionViolated("Yao-Yao partition in dimension " + std::to_string(F.dim) + " needs at least " +
                               std::to_string(need) + " points");

  YaoYaoPartition out;
  PointMultiset used = F;
  if (F.dim == 1) {
    out = build_1d(F);
  } else {
    std::optional<YaoYaoPartition> p;
    if (!opt.force_perturbation) p = build_2d(F);
    if (!p) {
      used = perturb_multiset(F);
      p = build_2d(used);
      if (!p) throw InvariantFailure("no bisecting line found for the perturbed multiset");
      p->perturbed = true;
    }
    out = std::move(*p);
  }
  finish(out, used);

  if (!cells_cover_space(out)) throw InvariantFailure("Yao-Yao cells do not tile the space");
  if (!cells_meet_count(out, used)) throw InvariantFailure("a Yao-Yao cell holds fewer than |F|/2^d points");
  if (!halfspace_property(out)) throw InvariantFailure("a halfspace through the center contains no cell");
  return out;
}

}  // namespace spacecross
