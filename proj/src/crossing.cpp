#include "spacecross/crossing.hpp"

#include "spacecross/transversal.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>

namespace spacecross {

std::vector<std::vector<int>> enumerate_disjoint_tuples(const Graph& g, int k) {
  if (k < 1) throw ValidationError("tuple size must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(g.n(), 0);
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int e = start; e < m; ++e) {
      const Edge& ed = edges[e];
      if (used[ed.u] || used[ed.v]) continue;
      used[ed.u] = used[ed.v] = 1;
      cur.push_back(e);
      self(self, e + 1);
      cur.pop_back();
      used[ed.u] = used[ed.v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

Vec3<double> to_double(const Point3& p) { return {p.x.get_d(), p.y.get_d(), p.z.get_d()}; }

std::optional<CrossingWitness> exact_combo(const std::vector<int>& edges, const std::vector<Segment3>& segs,
                                           const std::vector<int>& index) {
  auto res = transversal_exists_segments(segs);
  if (!res.exists) return std::nullopt;
  return CrossingWitness{edges, res.line, index, res.params};
}

// Odometer over one segment per edge; `test` returns a witness or nothing.
template <class Test>
std::optional<CrossingWitness> product_search(const std::vector<std::vector<Segment3>>& chains, Test&& test) {
  const std::size_t k = chains.size();
  std::vector<int> idx(k, 0);
  std::vector<Segment3> segs(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) segs[i] = chains[i][idx[i]];
    if (auto w = test(segs, idx)) return w;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < static_cast<int>(chains[i].size())) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

std::optional<CrossingWitness> float_search(const std::vector<int>& edges,
                                            const std::vector<std::vector<Segment3>>& chains, double tol) {
  return product_search(chains, [&](const std::vector<Segment3>& segs,
                                    const std::vector<int>& idx) -> std::optional<CrossingWitness> {
    if (segs.size() != 4) return exact_combo(edges, segs, idx);
    std::array<Vec3<double>, 8> pts;
    for (int i = 0; i < 4; ++i) {
      pts[2 * i] = to_double(segs[i].p);
      pts[2 * i + 1] = to_double(segs[i].q);
    }
    if (transversal_float(pts, tol) != Verdict::Yes) return std::nullopt;
    return CrossingWitness{edges, std::nullopt, idx, {}};
  });
}

// Necessary condition on the xy-shadow: a transversal projects to a line (or a
// point) meeting the hull of each group's projected points. If some line does,
// one through two of the points does too, so only those candidates are tried.
// Orientations are certified; any doubt keeps the node.
struct Flat {
  Interval x, y;
};

std::optional<int> orient(const Flat& a, const Flat& b, const Flat& c) {
  return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign();
}

bool shadow_may_stab(const std::array<std::vector<Flat>, 4>& groups) {
  std::vector<const Flat*> all;
  for (const auto& g : groups)
    for (const auto& f : g) all.push_back(&f);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Flat& a = *all[i];
      const Flat& b = *all[j];
      if (overlaps(a.x, b.x) && overlaps(a.y, b.y)) return true;  // cannot certify a line through them
      bool stabs_all = true;
      for (const auto& g : groups) {
        bool pos = true, neg = true;  // every point certainly on that side
        for (const auto& f : g) {
          auto o = orient(a, b, f);
          if (!o || *o <= 0) pos = false;
          if (!o || *o >= 0) neg = false;
          if (!pos && !neg) break;
        }
        if (pos || neg) {
          stabs_all = false;
          break;
        }
      }
      if (stabs_all) return true;
    }
  }
  return false;
}

// Branch and bound over four chains. Each node fixes a half-open segment range
// per chain; the certified box filter discards nodes with no transversal.
struct ChainBoxes {
  std::vector<Segment3> segs;
  std::vector<Box3> pts;  // chain points, pts[i] = start of segment i
  std::vector<Flat> flat;
  std::array<Flat, 4> corners;  // of the xy bounding box, as exact points
};

ChainBoxes prepare_chain(const std::vector<Point3>& chain) {
  if (chain.size() < 2) throw ValidationError("polyline needs at least two points");
  ChainBoxes c;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) c.segs.push_back({chain[k], chain[k + 1]});
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const auto& p : chain) {
    c.pts.push_back(box_of(p));
    c.flat.push_back({c.pts.back().x, c.pts.back().y});
    x0 = std::min(x0, c.flat.back().x.lo);
    x1 = std::max(x1, c.flat.back().x.hi);
    y0 = std::min(y0, c.flat.back().y.lo);
    y1 = std::max(y1, c.flat.back().y.hi);
  }
  c.corners = {Flat{Interval(x0), Interval(y0)}, Flat{Interval(x1), Interval(y0)}, Flat{Interval(x1), Interval(y1)},
               Flat{Interval(x0), Interval(y1)}};
  return c;
}

Box3 hull_range(const std::vector<Box3>& pts, int lo, int hi) {
  Box3 b = pts[lo];
  for (int i = lo + 1; i < hi; ++i)
    for (int c = 0; c < 3; ++c) b[c] = hull(b[c], pts[i][c]);
  return b;
}

std::optional<CrossingWitness> branch_and_bound(const std::vector<int>& edges,
                                                const std::array<const ChainBoxes*, 4>& ch,
                                                std::array<std::pair<int, int>, 4> r) {
  int widest = -1;
  int width = 1;
  for (int i = 0; i < 4; ++i) {
    int w = r[i].second - r[i].first;
    if (w > width) {
      width = w;
      widest = i;
    }
  }
  std::array<std::vector<Flat>, 4> groups;
  for (int i = 0; i < 4; ++i)
    groups[i].assign(ch[i]->flat.begin() + r[i].first, ch[i]->flat.begin() + r[i].second + 1);
  if (!shadow_may_stab(groups)) return std::nullopt;
  if (widest < 0) {
    std::vector<Segment3> segs(4);
    std::vector<int> idx(4);
    for (int i = 0; i < 4; ++i) {
      idx[i] = r[i].first;
      segs[i] = ch[i]->segs[idx[i]];
    }
    return exact_combo(edges, segs, idx);
  }
  std::array<Box3, 4> lo, hi;
  for (int i = 0; i < 4; ++i) {
    lo[i] = hull_range(ch[i]->pts, r[i].first, r[i].second);
    hi[i] = hull_range(ch[i]->pts, r[i].first + 1, r[i].second + 1);
  }
  if (transversal_filter_boxes(lo, hi) == Verdict::No) return std::nullopt;
  int mid = r[widest].first + width / 2;
  auto left = r;
  left[widest].second = mid;
  if (auto w = branch_and_bound(edges, ch, left)) return w;
  auto right = r;
  right[widest].first = mid;
  return branch_and_bound(edges, ch, right);
}

// The bounding-box corners stand in for each chain's shadow first: a line
// through the shadow hull also crosses the box, so this only prunes.
std::optional<CrossingWitness> prepared_transversal(const std::vector<int>& edges,
                                                    const std::array<const ChainBoxes*, 4>& ch) {
  std::array<std::vector<Flat>, 4> corners;
  std::array<std::pair<int, int>, 4> r;
  for (int i = 0; i < 4; ++i) {
    corners[i].assign(ch[i]->corners.begin(), ch[i]->corners.end());
    r[i] = {0, static_cast<int>(ch[i]->segs.size())};
  }
  if (!shadow_may_stab(corners)) return std::nullopt;
  return branch_and_bound(edges, ch, r);
}

std::vector<std::vector<Segment3>> chains_of(const SpatialDrawing& d, const std::vector<int>& edges) {
  std::vector<std::vector<Segment3>> chains;
  chains.reserve(edges.size());
  for (int e : edges) chains.push_back(d.segments(e));
  return chains;
}

void check_k(int k) {
  if (k != 3 && k != 4) throw ValidationError("k must be 3 or 4");
}

}  // namespace

std::optional<CrossingWitness> polyline_transversal(const std::array<std::vector<Point3>, 4>& chains) {
  std::array<ChainBoxes, 4> prepared;
  std::array<const ChainBoxes*, 4> ch;
  for (int i = 0; i < 4; ++i) {
    prepared[i] = prepare_chain(chains[i]);
    ch[i] = &prepared[i];
  }
  return prepared_transversal({}, ch);
}

std::optional<CrossingWitness> tuple_crossing(const SpatialDrawing& d, const std::vector<int>& edges, Mode mode,
                                              double tol) {
  check_k(static_cast<int>(edges.size()));
  auto chains = chains_of(d, edges);
  if (mode == Mode::Float) return float_search(edges, chains, tol);
  return product_search(chains, [&](const std::vector<Segment3>& segs, const std::vector<int>& idx) {
    return exact_combo(edges, segs, idx);
  });
}

bool verify_witness(const SpatialDrawing& d, const CrossingWitness& w) {
  if (!w.line || w.edges.size() != w.segment_index.size()) return false;
  for (std::size_t i = 0; i < w.edges.size(); ++i)
    for (std::size_t j = i + 1; j < w.edges.size(); ++j)
      if (d.graph.edges()[w.edges[i]].touches(d.graph.edges()[w.edges[j]])) return false;
  std::vector<Segment3> segs;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    auto chain = d.segments(w.edges[i]);
    if (w.segment_index[i] < 0 || w.segment_index[i] >= static_cast<int>(chain.size())) return false;
    segs.push_back(chain[w.segment_index[i]]);
  }
  return line_meets_segments(*w.line, segs) && transversal_exists_segments(segs).exists;
}

CrossingReport count_line_crossings_serial(const SpatialDrawing& d, const CrossingOptions& opt) {
  check_k(opt.k);
  auto t0 = std::chrono::steady_clock::now();
  CrossingReport rep;
  rep.mode = opt.mode;
  rep.k = opt.k;
  for (const auto& t : enumerate_disjoint_tuples(d.graph, opt.k)) {
    ++rep.tuples;
    auto w = tuple_crossing(d, t, opt.mode, opt.tol);
    if (!w) continue;
    ++rep.count;
    if (opt.witnesses) rep.witnesses.push_back(std::move(*w));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

CrossingReport count_line_crossings(const SpatialDrawing& d, const CrossingOptions& opt) {
  check_k(opt.k);
  auto t0 = std::chrono::steady_clock::now();
  const auto tuples = enumerate_disjoint_tuples(d.graph, opt.k);
  const std::int64_t nt = static_cast<std::int64_t>(tuples.size());
  std::vector<std::optional<CrossingWitness>> found(tuples.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;

  std::vector<ChainBoxes> prepared;
  if (opt.mode == Mode::Exact && opt.k == 4) {
    prepared.reserve(d.graph.m());
    for (int e = 0; e < static_cast<int>(d.graph.m()); ++e) prepared.push_back(prepare_chain(d.chain(e)));
  }

  int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::int64_t i = 0; i < nt; ++i) {
    try {
      const auto& t = tuples[i];
      if (!prepared.empty()) {
        found[i] = prepared_transversal(t, {&prepared[t[0]], &prepared[t[1]], &prepared[t[2]], &prepared[t[3]]});
        continue;
      }
      auto chains = chains_of(d, t);
      if (opt.mode == Mode::Float) {
        found[i] = float_search(t, chains, opt.tol);
        if (found[i] && opt.certify && !found[i]->line) {
          std::vector<Segment3> segs;
          for (std::size_t j = 0; j < t.size(); ++j) segs.push_back(chains[j][found[i]->segment_index[j]]);
          auto ex = exact_combo(t, segs, found[i]->segment_index);
          found[i] = ex ? ex : tuple_crossing(d, t, Mode::Exact, opt.tol);
        }
      } else {
        found[i] = product_search(chains, [&](const std::vector<Segment3>& segs, const std::vector<int>& idx) {
          return exact_combo(t, segs, idx);
        });
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  CrossingReport rep;
  rep.mode = opt.mode;
  rep.k = opt.k;
  rep.tuples = nt;
  for (auto& w : found) {
    if (!w) continue;
    ++rep.count;
    if (opt.witnesses) rep.witnesses.push_back(std::move(*w));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::int64_t count_planar_crossings(const SpatialDrawing& d) {
  if (!d.straight()) throw ValidationError("planar crossing count needs straight edges");
  for (int v = 0; v < d.graph.n(); ++v)
    if (sgn(d.positions[v].z) != 0) throw ValidationError("vertex " + std::to_string(v) + " is off the plane z = 0");
  auto flat = [&](int v) { return Point2{d.positions[v].x, d.positions[v].y}; };
  const auto& edges = d.graph.edges();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].touches(edges[j])) continue;
      if (segments_intersect_2d(flat(edges[i].u), flat(edges[i].v), flat(edges[j].u), flat(edges[j].v)) ==
          Contact2D::Crossing)
        ++count;
    }
  return count;
}

}  // namespace spacecross
