#include "spacecross/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace spacecross {

Rational random_unit_rational(std::mt19937_64& rng, long den) {
  if (den < 1) throw ValidationError("denominator bound must be positive");
  std::uniform_int_distribution<long> dq(1, den);
  const long q = dq(rng);
  std::uniform_int_distribution<long> dp(0, q);
  Rational r(dp(rng), q);
  r.canonicalize();
  return r;
}

namespace {

Point3 random_point3(std::mt19937_64& rng, long den) {
  Rational x = random_unit_rational(rng, den);
  Rational y = random_unit_rational(rng, den);
  Rational z = random_unit_rational(rng, den);
  return {x, y, z};
}

bool has_coplanar_four(const std::vector<Point3>& p) {
  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (orient3d(p[a], p[b], p[c], p[d]) == 0) return true;
  return false;
}

bool has_collinear_three(const std::vector<Point3>& p) {
  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (orient2d({p[a].x, p[a].y}, {p[b].x, p[b].y}, {p[c].x, p[c].y}) == 0) return true;
  return false;
}

}  // namespace

std::vector<Point3> random_points(int count, long den, std::uint64_t seed) {
  if (count < 0) throw ValidationError("point count must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Point3> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_point3(rng, den));
  return out;
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0 || !(p >= 0 && p <= 1)) throw ValidationError("erdos_renyi needs n >= 0 and p in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_graph_nm(int n, std::int64_t m, std::uint64_t seed) {
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (n < 0 || m < 0 || m > pairs) throw ValidationError("random graph needs 0 <= m <= C(n, 2)");
  std::mt19937_64 rng(seed);
  Graph g(n);
  if (2 * m > pairs) {
    // dense: shuffle all pairs and keep a prefix
    std::vector<std::pair<int, int>> all;
    all.reserve(pairs);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(m);
    std::sort(all.begin(), all.end());
    for (auto [u, v] : all) g.add_edge(u, v);
    return g;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<std::int64_t>(g.m()) < m) {
    const int u = pick(rng), v = pick(rng);
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

SpatialDrawing random_planar_drawing(int n, std::int64_t m, long den, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point3> pos;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 1000) throw RetryExhausted("no planar point set without collinear triples");
    pos.clear();
    for (int i = 0; i < n; ++i) {
      Rational x = random_unit_rational(rng, den);
      Rational y = random_unit_rational(rng, den);
      pos.push_back({x, y, Rational(0)});
    }
    if (!has_collinear_three(pos)) break;
  }
  return straight_drawing(random_graph_nm(n, m, rng()), std::move(pos));
}

SpatialDrawing random_spatial_drawing(int n, std::int64_t m, long den, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point3> pos;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 1000) throw RetryExhausted("no point set without coplanar quadruples");
    pos.clear();
    for (int i = 0; i < n; ++i) pos.push_back(random_point3(rng, den));
    if (!has_coplanar_four(pos)) break;
  }
  return straight_drawing(random_graph_nm(n, m, rng()), std::move(pos));
}

std::array<PolygonalCycle, 2> hopf_pair(long offset) {
  auto P = [&](long x, long y, long z) { return Point3{Rational(x), Rational(y), Rational(z + offset)}; };
  return {PolygonalCycle{{P(-1, -1, 0), P(1, -1, 0), P(1, 1, 0), P(-1, 1, 0)}},
          PolygonalCycle{{P(0, 0, 1), P(2, 0, 1), P(2, 0, -1), P(0, 0, -1)}}};
}

std::array<PolygonalCycle, 4> stacked_hopf_pairs(long gap) {
  const auto a = hopf_pair(0), b = hopf_pair(gap);
  return {a[0], a[1], b[0], b[1]};
}

K6Fixture disjoint_k6_fixture(int per_side, std::uint64_t seed) {
  if (per_side < 0) throw ValidationError("copies per side must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> jitter(-2, 2);
  const int copies = 2 * per_side;
  Graph g(6 * copies);
  std::vector<Point3> pos;
  K6Fixture fx;
  for (int c = 0; c < copies; ++c) {
    // clusters on a coarse lattice, each inside its own unit cube
    const Point3 origin{Rational(8 * (c % 3) + jitter(rng)), Rational(8 * (c / 3) + jitter(rng)),
                        Rational(jitter(rng))};
    std::vector<Point3> local;
    do {
      local.clear();
      for (int i = 0; i < 6; ++i) local.push_back(origin + random_point3(rng, 64));
    } while (has_coplanar_four(local));
    for (int i = 0; i < 6; ++i) {
      pos.push_back(local[i]);
      fx.sides.push_back(c < per_side ? 0 : 1);
      for (int j = 0; j < i; ++j) g.add_edge(6 * c + j, 6 * c + i);
    }
  }
  fx.drawing = straight_drawing(std::move(g), std::move(pos));
  return fx;
}

PointMultiset random_multiset(int dim, int n, long den, std::uint64_t seed) {
  if (dim < 1 || n < 0) throw ValidationError("multiset needs dim >= 1 and n >= 0");
  std::mt19937_64 rng(seed);
  PointMultiset F{dim, {}};
  for (int i = 0; i < n; ++i) {
    BlockPoint p;
    for (int c = 0; c < dim; ++c) p.push_back(2 * random_unit_rational(rng, den) - 1);
    F.points.push_back(std::move(p));
  }
  return F;
}

SameTypeInstance random_same_type_instance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(1, 2), expo(0, 2), coeff(-5, 5);
  const int d1 = coin(rng), d2 = coin(rng);
  SameTypeInstance inst;
  inst.sets = {random_multiset(d1, n, 6, rng()), random_multiset(d2, n, 6, rng())};
  const int polys = coin(rng);
  for (int j = 0; j < polys; ++j) {
    SparsePolynomial f({d1, d2});
    auto random_exps = [&](int d, bool nonconstant) {
      std::vector<int> e(d);
      do {
        for (auto& x : e) x = expo(rng);
      } while (nonconstant && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
      return e;
    };
    std::vector<std::vector<int>> tails{std::vector<int>(d2, 0)};
    const int nonconstant = coin(rng);
    while (static_cast<int>(tails.size()) < 1 + nonconstant) {
      auto e = random_exps(d2, true);
      if (std::find(tails.begin(), tails.end(), e) == tails.end()) tails.push_back(e);
    }
    for (const auto& tail : tails) {
      for (int r = coin(rng); r > 0; --r) {
        auto e = random_exps(d1, false);
        e.insert(e.end(), tail.begin(), tail.end());
        int c = 0;
        while (c == 0) c = coeff(rng);
        f.add_term(e, Rational(c));
      }
    }
    inst.polys.push_back(std::move(f));
  }
  return inst;
}

}  // namespace spacecross
