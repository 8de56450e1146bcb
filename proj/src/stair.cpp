#include "spacecross/stair.hpp"

#include "spacecross/crossing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spacecross {

StretchedGrid::StretchedGrid(int d, int n) : d_(d), n_(n) {
  if (d < 1) throw ValidationError("grid dimension must be positive");
  if (n < 1) throw ValidationError("grid needs at least one point per axis");
}

StretchedGrid::StretchedGrid(std::vector<std::vector<Rational>> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw ValidationError("grid needs at least one axis");
  d_ = static_cast<int>(axes_.size());
  n_ = static_cast<int>(axes_[0].size());
  if (n_ < 1) throw ValidationError("grid needs at least one point per axis");
  for (int i = 0; i < d_; ++i) {
    const auto& ax = axes_[i];
    if (static_cast<int>(ax.size()) != n_) throw ValidationError("grid axes differ in length");
    if (ax[0] != 1) throw ValidationError("axis " + std::to_string(i) + " must start at 1");
    for (int j = 1; j < n_; ++j)
      if (!(ax[j - 1] < ax[j]))
        throw ValidationError("axis " + std::to_string(i) + " not strictly increasing at " + std::to_string(j + 1));
  }
}

StretchedGrid StretchedGrid::explicit_default(int n) {
  if (n < 1) throw ValidationError("grid needs at least one point per axis");
  const long M = 16L * n;
  std::vector<std::vector<Rational>> axes(3);
  for (int j = 1; j <= n; ++j) {
    axes[0].push_back(Rational(j));
    axes[1].push_back(pow2(64L * (j - 1)));
    axes[2].push_back(pow2(64L * (j - 1) * M));
  }
  return StretchedGrid(std::move(axes));
}

Rational StretchedGrid::coord(int axis, int j) const {
  if (axis < 0 || axis >= d_ || j < 1 || j > n_)
    throw ValidationError("grid index out of range");
  return axes_.empty() ? Rational(j) : axes_[axis][j - 1];
}

Point3 StretchedGrid::point(const std::array<int, 3>& idx) const {
  if (d_ != 3) throw ValidationError("point() needs a 3-dimensional grid");
  return {coord(0, idx[0]), coord(1, idx[1]), coord(2, idx[2])};
}

std::pair<std::optional<Rational>, std::optional<Rational>> StretchedGrid::close_range(
    int axis, const Rational& v) const {
  auto value = [&](int j) { return coord(axis, j); };
  // first grid index with value >= v
  int lo = 1, hi = n_ + 1;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (value(mid) < v) lo = mid + 1;
    else hi = mid;
  }
  const int j = lo;
  std::optional<Rational> left, right;
  if (j <= n_ && value(j) == v) {
    if (j > 1) left = value(j - 1);
    if (j < n_) right = value(j + 1);
  } else {
    if (j > 1) left = value(j - 1);
    if (j <= n_) right = value(j);
  }
  return {left, right};
}

int grid_distance(const StretchedGrid& g, const GridPoint& a, const GridPoint& b) {
  if (static_cast<int>(a.size()) != g.d() || static_cast<int>(b.size()) != g.d())
    throw ValidationError("grid point has wrong dimension");
  int k = 1;
  for (int c = 0; c < g.d(); ++c) {
    if (a[c] < 1 || a[c] > g.n() || b[c] < 1 || b[c] > g.n())
      throw ValidationError("grid point index out of range");
    k = std::max(k, std::abs(a[c] - b[c]));
  }
  return k;
}

namespace {

// Path from a to b where a and b agree on every coordinate >= k.
std::vector<StairSegment> stair_rec(const std::vector<Rational>& a, const std::vector<Rational>& b, int k) {
  if (k == 0) return {};
  if (b[k - 1] < a[k - 1]) {
    auto segs = stair_rec(b, a, k);
    std::reverse(segs.begin(), segs.end());
    for (auto& s : segs) std::swap(s.from, s.to);
    return segs;
  }
  std::vector<StairSegment> segs;
  auto a2 = a;
  a2[k - 1] = b[k - 1];
  if (a2 != a) segs.push_back({a, a2, k - 1});
  auto rest = stair_rec(a2, b, k - 1);
  segs.insert(segs.end(), rest.begin(), rest.end());
  return segs;
}

}  // namespace

StairPath stair_path(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size() || a.empty()) throw ValidationError("stair_path endpoints differ in dimension");
  return {a, b, stair_rec(a, b, static_cast<int>(a.size()))};
}

CloseBox close_box(const StretchedGrid& g, const Point3& p) {
  if (g.d() != 3) throw ValidationError("close_box needs a 3-dimensional grid");
  return {g.close_range(0, p.x), g.close_range(1, p.y), g.close_range(2, p.z)};
}

bool close_to_segment(const StretchedGrid& g, const Point3& p, const Point3& a, const Point3& b) {
  const CloseBox box = close_box(g, p);
  // clip t in [0, 1] against each slab of a + t (b - a)
  Rational t0 = 0, t1 = 1;
  for (int c = 0; c < 3; ++c) {
    const Rational& ac = a[c];
    const Rational e = b[c] - a[c];
    const auto& [lo, hi] = box[c];
    if (sgn(e) == 0) {
      if ((lo && ac < *lo) || (hi && ac > *hi)) return false;
      continue;
    }
    for (const auto* bound : {&lo, &hi}) {
      if (!*bound) continue;
      const Rational t = (**bound - ac) / e;
      // the lower bound limits t from below when e > 0
      const bool lower = (bound == &lo) == (sgn(e) > 0);
      if (lower) t0 = std::max(t0, t);
      else t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  return true;
}

bool close_to_stair_path(const StretchedGrid& g, const Point3& p, const StairPath& path) {
  if (path.a.size() != 3) throw ValidationError("close_to_stair_path needs a 3-dimensional path");
  const CloseBox box = close_box(g, p);
  auto inside = [&](int c, const Rational& lo, const Rational& hi) {
    return (!box[c].first || !(hi < *box[c].first)) && (!box[c].second || !(*box[c].second < lo));
  };
  if (path.segments.empty()) {
    for (int c = 0; c < 3; ++c)
      if (!inside(c, path.a[c], path.a[c])) return false;
    return true;
  }
  for (const auto& s : path.segments) {
    bool ok = true;
    for (int c = 0; c < 3 && ok; ++c) ok = inside(c, std::min(s.from[c], s.to[c]), std::max(s.from[c], s.to[c]));
    if (ok) return true;
  }
  return false;
}

int interval_D(int n, std::int64_t m) {
  if (n < 2) throw ValidationError("interval graph needs n >= 2");
  const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 1 || m > max_m)
    throw ValidationError("m = " + std::to_string(m) + " outside [1, " + std::to_string(max_m) + "]");
  return static_cast<int>((2 * m + n - 1) / n);
}

Graph interval_graph(int n, std::int64_t m) {
  const int D = interval_D(n, m);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j - i <= D; ++j) g.add_edge(i, j);
  return g;
}

StandardStairDrawing standard_stair_drawing(int n, std::int64_t m, const StretchedGrid& g) {
  if (g.d() != 3) throw ValidationError("standard drawing needs a 3-dimensional grid");
  if (g.n() < 5 * n)
    throw ValidationError("grid too small: need " + std::to_string(5 * n) + " points per axis, have " +
                          std::to_string(g.n()));
  StandardStairDrawing out{interval_graph(n, m), {}, {}};
  for (int v = 0; v < n; ++v) out.diagonal_index.push_back(5 * (v + 1));
  for (const auto& e : out.graph.edges()) {
    Rational s(out.diagonal_index[e.u]), t(out.diagonal_index[e.v]);
    out.edge_paths.push_back(stair_path({s, s, s}, {t, t, t}));
  }
  return out;
}

SpatialDrawing standard_straight_drawing(int n, std::int64_t m, const StretchedGrid& g) {
  if (g.d() != 3) throw ValidationError("standard drawing needs a 3-dimensional grid");
  if (g.n() < 5 * n)
    throw ValidationError("grid too small: need " + std::to_string(5 * n) + " points per axis");
  std::vector<Point3> pos;
  for (int v = 1; v <= n; ++v) pos.push_back(g.diagonal(5 * v));
  return straight_drawing(interval_graph(n, m), std::move(pos));
}

std::vector<IntBox> stair_line_pieces(const StairLine& l, int floor_z) {
  const auto [x0, y0, c2, z1] = l.c;
  std::vector<IntBox> out;
  out.push_back({{{x0, x0}, {y0, y0}, {std::min(floor_z, z1), std::max(floor_z, z1)}}});
  if (l.type == StairLineType::L3) {
    const int x1 = c2;
    out.push_back({{{std::min(x0, x1), std::max(x0, x1)}, {y0, y0}, {z1, z1}}});
    out.push_back({{{x1, x1}, {kMinusInf, y0}, {z1, z1}}});
    return out;
  }
  const int y1 = c2;
  const std::array<int, 2> ray =
      l.type == StairLineType::L1 ? std::array<int, 2>{x0, kPlusInf} : std::array<int, 2>{kMinusInf, x0};
  if (y0 <= y1) {
    out.push_back({{{x0, x0}, {y0, y1}, {z1, z1}}});
    out.push_back({{ray, {y1, y1}, {z1, z1}}});
  } else {
    out.push_back({{ray, {y0, y0}, {z1, z1}}});
  }
  return out;
}

namespace {

bool boxes_meet(const IntBox& a, const IntBox& b) {
  for (int c = 0; c < 3; ++c)
    if (a[c][1] < b[c][0] || b[c][1] < a[c][0]) return false;
  return true;
}

// Pieces of sigma((s,s,s),(t,t,t)) for s < t.
std::array<IntBox, 3> edge_pieces(int s, int t) {
  return {{{{{s, s}, {s, s}, {s, t}}}, {{{s, s}, {s, t}, {t, t}}}, {{{s, t}, {t, t}, {t, t}}}}};
}

void check_anchors(const std::array<std::array<int, 2>, 4>& anchors) {
  std::vector<int> v;
  for (const auto& p : anchors) v.insert(v.end(), p.begin(), p.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw ValidationError("stair-crossing anchors must be distinct");
}

}  // namespace

bool pairing_condition(const std::array<std::array<int, 2>, 4>& anchors) {
  for (int i = 0; i < 4; ++i) {
    const int lo = std::min(anchors[i][0], anchors[i][1]), hi = std::max(anchors[i][0], anchors[i][1]);
    bool met = false;
    for (int j = 0; j < 4 && !met; ++j) {
      if (j == i) continue;
      const int lo2 = std::min(anchors[j][0], anchors[j][1]), hi2 = std::max(anchors[j][0], anchors[j][1]);
      met = lo <= hi2 && lo2 <= hi;
    }
    if (!met) return false;
  }
  return true;
}

StairCrossing stair_crossing_exists(const std::array<std::array<int, 2>, 4>& anchors) {
  check_anchors(anchors);
  StairCrossing res;
  for (const auto& p : anchors) res.rank_values.insert(res.rank_values.end(), p.begin(), p.end());
  std::sort(res.rank_values.begin(), res.rank_values.end());
  auto rank = [&](int v) {
    return 2 * static_cast<int>(std::lower_bound(res.rank_values.begin(), res.rank_values.end(), v) -
                                res.rank_values.begin()) + 2;
  };
  std::array<std::array<IntBox, 3>, 4> paths;
  for (int i = 0; i < 4; ++i) {
    int s = rank(anchors[i][0]), t = rank(anchors[i][1]);
    if (s > t) std::swap(s, t);
    paths[i] = edge_pieces(s, t);
  }
  // Anchors sit at even ranks 2..16; odd ranks 1..17 are the gaps and the two
  // outer values, 0 is the floor below everything.
  constexpr int lo = 1, hi = 17, floor_z = 0;
  for (auto type : {StairLineType::L1, StairLineType::L2, StairLineType::L3}) {
    StairLine l{type, {}};
    for (l.c[0] = lo; l.c[0] <= hi; ++l.c[0])
      for (l.c[1] = lo; l.c[1] <= hi; ++l.c[1])
        for (l.c[2] = lo; l.c[2] <= hi; ++l.c[2])
          for (l.c[3] = lo; l.c[3] <= hi; ++l.c[3]) {
            const auto pieces = stair_line_pieces(l, floor_z);
            bool all = true;
            for (const auto& path : paths) {
              bool hit = false;
              for (const auto& q : pieces)
                for (const auto& e : path) hit = hit || boxes_meet(q, e);
              if (!hit) {
                all = false;
                break;
              }
            }
            if (all) {
              res.exists = true;
              res.witness = l;
              return res;
            }
          }
  }
  return res;
}

StairCrossing stair_crossing_exists(const std::array<StairPath, 4>& paths) {
  std::array<std::array<int, 2>, 4> anchors{};
  for (int i = 0; i < 4; ++i) {
    const auto& p = paths[i];
    if (p.a.size() != 3 || p.b.size() != 3) throw ValidationError("stair-crossing paths must be 3-dimensional");
    for (int end = 0; end < 2; ++end) {
      const auto& q = end == 0 ? p.a : p.b;
      if (q[0] != q[1] || q[1] != q[2] || q[0].get_den() != 1 || !q[0].get_num().fits_sint_p())
        throw ValidationError("stair-crossing paths must join integer diagonal points");
      anchors[i][end] = static_cast<int>(q[0].get_num().get_si());
    }
  }
  return stair_crossing_exists(anchors);
}

int interval_components(const std::array<std::array<int, 2>, 4>& pairs) {
  std::array<std::pair<int, int>, 8> ev;
  for (int i = 0; i < 4; ++i) {
    ev[2 * i] = {std::min(pairs[i][0], pairs[i][1]), +1};
    ev[2 * i + 1] = {std::max(pairs[i][0], pairs[i][1]), -1};
  }
  std::sort(ev.begin(), ev.end());
  int depth = 0, comps = 0;
  for (const auto& [pos, d] : ev) {
    depth += d;
    if (depth == 0) ++comps;
  }
  return comps;
}

std::vector<OrderType> enumerate_order_types() {
  std::vector<OrderType> out;
  std::array<std::array<int, 2>, 4> cur{};
  std::array<bool, 9> used{};
  auto rec = [&](auto& self, int k) -> void {
    if (k == 4) {
      out.push_back({cur, interval_components(cur)});
      return;
    }
    int first = 1;
    while (used[first]) ++first;
    used[first] = true;
    for (int other = first + 1; other <= 8; ++other) {
      if (used[other]) continue;
      used[other] = true;
      cur[k] = {first, other};
      self(self, k + 1);
      used[other] = false;
    }
    used[first] = false;
  };
  rec(rec, 0);
  return out;
}

namespace {

struct TypeSpan {
  int type;
  std::array<std::array<int, 2>, 4> pairs;  // 0-based positions
};

std::vector<TypeSpan> candidate_types() {
  std::vector<TypeSpan> out;
  const auto types = enumerate_order_types();
  for (int i = 0; i < static_cast<int>(types.size()); ++i) {
    if (types[i].components > 2) continue;
    TypeSpan t{i, {}};
    for (int k = 0; k < 4; ++k) t.pairs[k] = {types[i].pairs[k][0] - 1, types[i].pairs[k][1] - 1};
    out.push_back(t);
  }
  return out;
}

// Calls f(v) for every increasing 8-tuple v of 1..n with v[0] == first.
template <class F>
void for_each_subset(int n, int first, F&& f) {
  std::array<int, 8> v{};
  v[0] = first;
  auto rec = [&](auto& self, int k) -> void {
    if (k == 8) {
      f(v);
      return;
    }
    for (int x = v[k - 1] + 1; x <= n - (7 - k); ++x) {
      v[k] = x;
      self(self, k + 1);
    }
  };
  rec(rec, 1);
}

}  // namespace

CandidateCount count_candidate_quadruples(int n, std::int64_t m) {
  const int D = interval_D(n, m);
  const auto spans = candidate_types();
  CandidateCount res;
  res.per_type.assign(105, 0);
  if (n < 8) return res;
  std::vector<std::vector<std::int64_t>> partial(n + 1, std::vector<std::int64_t>(105, 0));
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 1; first <= n - 7; ++first) {
    auto& local = partial[first];
    for_each_subset(n, first, [&](const std::array<int, 8>& v) {
      for (const auto& t : spans) {
        bool ok = true;
        for (const auto& p : t.pairs) ok = ok && v[p[1]] - v[p[0]] <= D;
        if (ok) ++local[t.type];
      }
    });
  }
  for (const auto& row : partial)
    for (int t = 0; t < 105; ++t) res.per_type[t] += row[t];
  res.count = std::accumulate(res.per_type.begin(), res.per_type.end(), std::int64_t{0});
  return res;
}

std::vector<std::int64_t> candidate_counts_by_D(int n) {
  if (n < 2) throw ValidationError("interval graph needs n >= 2");
  const auto spans = candidate_types();
  std::vector<std::int64_t> hist(n + 1, 0);
  if (n >= 8) {
    std::vector<std::vector<std::int64_t>> partial(n + 1, std::vector<std::int64_t>(n + 1, 0));
#pragma omp parallel for schedule(dynamic, 1)
    for (int first = 1; first <= n - 7; ++first) {
      auto& local = partial[first];
      for_each_subset(n, first, [&](const std::array<int, 8>& v) {
        for (const auto& t : spans) {
          int need = 0;
          for (const auto& p : t.pairs) need = std::max(need, v[p[1]] - v[p[0]]);
          ++local[need];
        }
      });
    }
    for (const auto& row : partial)
      for (int d = 0; d <= n; ++d) hist[d] += row[d];
  }
  std::partial_sum(hist.begin(), hist.end(), hist.begin());
  return hist;
}

std::int64_t count_candidate_quadruples_serial(int n, std::int64_t m) {
  const Graph g = interval_graph(n, m);
  std::int64_t count = 0;
  for (const auto& tup : enumerate_disjoint_tuples(g, 4)) {
    // merge the four intervals left to right
    std::vector<std::pair<int, int>> iv;
    for (int e : tup) iv.push_back({g.edges()[e].u, g.edges()[e].v});
    std::sort(iv.begin(), iv.end());
    int comps = 1, reach = iv[0].second;
    for (std::size_t i = 1; i < iv.size(); ++i) {
      if (iv[i].first > reach) ++comps;
      reach = std::max(reach, iv[i].second);
    }
    if (comps <= 2) ++count;
  }
  return count;
}

}  // namespace spacecross
