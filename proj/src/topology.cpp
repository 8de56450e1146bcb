#include "spacecross/topology.hpp"

#include "spacecross/transversal.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace spacecross {

namespace {

Rational cross2(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
Point2 sub2(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

// Some other axis survives when dropping axis k, so the projection is
// injective on the plane (normal n) or on the line (direction d).
int injective_drop_axis(const Point3& n, const Point3& d) {
  if (sgn(n.x) != 0 || sgn(n.y) != 0 || sgn(n.z) != 0) {
    for (int k = 0; k < 3; ++k)
      if (sgn(n[k]) != 0) return k;
  }
  for (int i = 0; i < 3; ++i)
    if (sgn(d[i]) != 0) return (i + 1) % 3;
  throw DegenerateInput("zero-length segment");
}

Point2 drop(const Point3& p, int k) {
  if (k == 0) return {p.y, p.z};
  if (k == 1) return {p.x, p.z};
  return {p.x, p.y};
}

void require_disjoint(const PolygonalCycle& a, const PolygonalCycle& b, const std::string& what) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (segments_touch_3d(a.segment(i), b.segment(j)))
        throw NotDisjoint(what + ": segment " + std::to_string(i) + " meets segment " + std::to_string(j));
}

struct Projection {
  Point3 view, u, w;

  explicit Projection(long t) {
    const Rational r(t);
    view = {Rational(1), r, r * r};
    u = {r, Rational(-1), Rational(0)};
    w = cross(view, u);  // (u, w, view) is right-handed
  }
  Point2 plane(const Point3& p) const { return {dot(p, u), dot(p, w)}; }
  Rational depth(const Point3& p) const { return dot(p, view); }
};

}  // namespace

bool segments_touch_3d(const Segment3& a, const Segment3& b) {
  if (orient3d(a.p, a.q, b.p, b.q) != 0) return false;
  const Point3 da = a.q - a.p;
  Point3 n = cross(da, b.p - a.p);
  if (sgn(n.x) == 0 && sgn(n.y) == 0 && sgn(n.z) == 0) n = cross(da, b.q - a.p);
  const int k = injective_drop_axis(n, da);
  return segments_intersect_2d(drop(a.p, k), drop(a.q, k), drop(b.p, k), drop(b.q, k)) != Contact2D::Disjoint;
}

void PolygonalCycle::validate() const {
  const std::size_t n = points.size();
  if (n < 3) throw ValidationError("cycle needs at least 3 points, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (points[i] == points[(i + 1) % n])
      throw ValidationError("cycle repeats point " + std::to_string(i) + " consecutively");
  for (std::size_t i = 0; i < n; ++i) {
    // adjacent segments fold back onto each other
    const Point3& v = points[(i + 1) % n];
    const Point3 a = points[i] - v, c = points[(i + 2) % n] - v;
    const Point3 x = cross(a, c);
    if (sgn(x.x) == 0 && sgn(x.y) == 0 && sgn(x.z) == 0 && sgn(dot(a, c)) > 0)
      throw ValidationError("cycle folds back at point " + std::to_string((i + 1) % n));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_touch_3d(segment(i), segment(j)))
        throw ValidationError("cycle is not simple: segments " + std::to_string(i) + " and " + std::to_string(j) +
                              " meet");
    }
}

std::optional<int> linking_number_along(const PolygonalCycle& c1, const PolygonalCycle& c2, long t) {
  const Projection pr(t);
  auto flat = [&](const PolygonalCycle& c) {
    std::vector<Point2> out;
    out.reserve(c.size());
    for (const auto& p : c.points) out.push_back(pr.plane(p));
    return out;
  };
  const auto f1 = flat(c1), f2 = flat(c2);
  const std::size_t n1 = f1.size(), n2 = f2.size();
  for (const auto* f : {&f1, &f2})
    for (std::size_t i = 0; i < f->size(); ++i)
      if ((*f)[i] == (*f)[(i + 1) % f->size()]) return std::nullopt;

  int lk = 0;
  for (std::size_t i = 0; i < n1; ++i) {
    const Point2 &a0 = f1[i], &a1 = f1[(i + 1) % n1];
    for (std::size_t j = 0; j < n2; ++j) {
      const Point2 &b0 = f2[j], &b1 = f2[(j + 1) % n2];
      const Contact2D c = segments_intersect_2d(a0, a1, b0, b1);
      if (c == Contact2D::Touching) return std::nullopt;
      if (c == Contact2D::Disjoint) continue;
      const Point2 da = sub2(a1, a0), db = sub2(b1, b0);
      const Rational den = cross2(da, db);
      const Rational s = cross2(sub2(b0, a0), db) / den;
      const Rational r = cross2(sub2(b0, a0), da) / den;
      const Segment3 sa = c1.segment(i), sb = c2.segment(j);
      const Rational za = pr.depth(sa.p) + s * (pr.depth(sa.q) - pr.depth(sa.p));
      const Rational zb = pr.depth(sb.p) + r * (pr.depth(sb.q) - pr.depth(sb.p));
      if (za > zb) lk += sgn(den);
    }
  }
  return lk;
}

long generic_direction(const PolygonalCycle& c1, const PolygonalCycle& c2, long max_t) {
  for (long t = 1; t <= max_t; ++t)
    if (linking_number_along(c1, c2, t)) return t;
  throw RetryExhausted("no generic projection direction with t <= " + std::to_string(max_t));
}

int linking_number(const PolygonalCycle& c1, const PolygonalCycle& c2) {
  c1.validate();
  c2.validate();
  require_disjoint(c1, c2, "cycles intersect");
  for (long t = 1; t <= 100000; ++t)
    if (auto lk = linking_number_along(c1, c2, t)) return *lk;
  throw RetryExhausted("no generic projection direction found");
}

std::array<std::pair<std::array<int, 3>, std::array<int, 3>>, 10> k6_triangle_splits() {
  std::array<std::pair<std::array<int, 3>, std::array<int, 3>>, 10> out;
  int k = 0;
  for (int a = 1; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      std::array<int, 3> rest{};
      int r = 0;
      for (int v = 1; v < 6; ++v)
        if (v != a && v != b) rest[r++] = v;
      out[k++] = {{0, a, b}, rest};
    }
  return out;
}

namespace {

ConwayGordonResult collect_parity(const std::array<int, 10>& lks) {
  ConwayGordonResult res;
  const auto splits = k6_triangle_splits();
  int odd = -1, parity = 0;
  for (int k = 0; k < 10; ++k) {
    res.pairs[k] = {splits[k].first, splits[k].second, lks[k]};
    parity ^= lks[k] & 1;
    if (odd < 0 && (lks[k] & 1)) odd = k;
  }
  res.parity_sum = parity;
  if (parity != 1 || odd < 0)
    throw InvariantFailure("sum of the 10 triangle-pair linking numbers is even");
  res.odd_pair = res.pairs[odd];
  return res;
}

}  // namespace

ConwayGordonResult conway_gordon_check(const std::array<Point3, 6>& points) {
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d)
          if (orient3d(points[a], points[b], points[c], points[d]) == 0)
            throw DegeneratePosition("points " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                     std::to_string(c) + ", " + std::to_string(d) + " are coplanar");
  std::array<int, 10> lks{};
  const auto splits = k6_triangle_splits();
  for (int k = 0; k < 10; ++k) {
    auto tri = [&](const std::array<int, 3>& v) {
      return PolygonalCycle{{points[v[0]], points[v[1]], points[v[2]]}};
    };
    lks[k] = linking_number(tri(splits[k].first), tri(splits[k].second));
  }
  return collect_parity(lks);
}

int SubdivisionEmbedding::pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return i * 5 - i * (i - 1) / 2 + (j - i - 1);
}

void SubdivisionEmbedding::validate(const Graph& g) const {
  std::vector<int> owner(g.n(), -1);
  for (int i = 0; i < 6; ++i) {
    if (branch[i] < 0 || branch[i] >= g.n()) throw ValidationError("branch vertex out of range");
    if (owner[branch[i]] != -1) throw ValidationError("branch vertices repeat");
    owner[branch[i]] = 100 + i;
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const int k = pair_index(i, j);
      const auto& p = paths[k];
      const std::string name = "path " + std::to_string(i) + "-" + std::to_string(j);
      if (p.size() < 2) throw ValidationError(name + " is missing");
      if (p.front() != branch[i] || p.back() != branch[j]) throw ValidationError(name + " has wrong endpoints");
      for (std::size_t q = 0; q + 1 < p.size(); ++q)
        if (p[q] < 0 || p[q] >= g.n() || p[q + 1] < 0 || p[q + 1] >= g.n() || !g.has_edge(p[q], p[q + 1]))
          throw ValidationError(name + " uses a missing edge");
      for (std::size_t q = 1; q + 1 < p.size(); ++q) {
        if (owner[p[q]] != -1) throw ValidationError(name + " reuses vertex " + std::to_string(p[q]));
        owner[p[q]] = k;
      }
    }
}

namespace {

using EdgeIndex = std::unordered_map<std::uint64_t, int>;

std::uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

EdgeIndex index_edges(const Graph& g) {
  EdgeIndex idx;
  for (int e = 0; e < static_cast<int>(g.m()); ++e) idx[edge_key(g.edges()[e].u, g.edges()[e].v)] = e;
  return idx;
}

PolygonalCycle trace_cycle(const SpatialDrawing& d, const EdgeIndex& idx, const SubdivisionEmbedding& s,
                           const std::array<int, 3>& tri) {
  PolygonalCycle c;
  for (int leg = 0; leg < 3; ++leg) {
    const int i = tri[leg], j = tri[(leg + 1) % 3];
    std::vector<int> path = s.paths[SubdivisionEmbedding::pair_index(i, j)];
    if (i > j) std::reverse(path.begin(), path.end());
    for (std::size_t q = 0; q + 1 < path.size(); ++q) {
      const int e = idx.at(edge_key(path[q], path[q + 1]));
      auto chain = d.chain(e);
      if (d.graph.edges()[e].u != path[q]) std::reverse(chain.begin(), chain.end());
      c.points.insert(c.points.end(), chain.begin(), chain.end() - 1);
    }
  }
  return c;
}

}  // namespace

PolygonalCycle subdivision_cycle(const SpatialDrawing& d, const SubdivisionEmbedding& s,
                                 const std::array<int, 3>& tri) {
  return trace_cycle(d, index_edges(d.graph), s, tri);
}

LinkedPair find_linked_pair(const SpatialDrawing& d, const SubdivisionEmbedding& s) {
  d.validate();
  s.validate(d.graph);
  const EdgeIndex idx = index_edges(d.graph);
  const auto splits = k6_triangle_splits();
  std::array<int, 10> lks{};
  std::array<PolygonalCycle, 10> firsts, seconds;
  for (int k = 0; k < 10; ++k) {
    firsts[k] = trace_cycle(d, idx, s, splits[k].first);
    seconds[k] = trace_cycle(d, idx, s, splits[k].second);
    lks[k] = linking_number(firsts[k], seconds[k]);
  }
  const ConwayGordonResult cg = collect_parity(lks);
  int k = 0;
  while (cg.pairs[k].first != cg.odd_pair.first) ++k;
  return {cg.odd_pair, firsts[k], seconds[k], lks};
}

CycleTransversal transversal_through_cycles(const std::array<PolygonalCycle, 4>& c) {
  for (const auto& x : c) x.validate();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      require_disjoint(c[i], c[j], "cycles " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
  CycleTransversal res;
  res.linked_hypothesis = linking_number(c[0], c[1]) != 0 && linking_number(c[2], c[3]) != 0;
  std::array<std::vector<Point3>, 4> chains;
  for (int i = 0; i < 4; ++i) {
    chains[i] = c[i].points;
    chains[i].push_back(c[i].points.front());
  }
  res.witness = polyline_transversal(chains);
  res.lemma_violation = res.linked_hypothesis && !res.witness;
  return res;
}

}  // namespace spacecross
