#include "spacecross/pipeline.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace spacecross {

namespace {

bool connected_without(const std::vector<std::vector<int>>& adj, int a, int b) {
  const int n = static_cast<int>(adj.size());
  int start = 0;
  while (start == a || start == b) ++start;
  if (start >= n) return true;
  std::vector<char> seen(n, 0);
  seen[start] = 1;
  if (a >= 0) seen[a] = 1;
  if (b >= 0) seen[b] = 1;
  std::vector<int> stack{start};
  int reached = 1 + (a >= 0) + (b >= 0 && b != a);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

// Half-plane first, then cross product: counter-clockwise order of directions.
bool angle_less(const Point2& a, const Point2& b) {
  auto upper = [](const Point2& p) { return sgn(p.y) > 0 || (sgn(p.y) == 0 && sgn(p.x) > 0); };
  const bool ua = upper(a), ub = upper(b);
  if (ua != ub) return ua;
  return sgn(a.x * b.y - a.y * b.x) > 0;
}

}  // namespace

bool is_connected(const Graph& g) { return g.n() == 0 || connected_without(g.adjacency(), -1, -1); }

bool is_planar(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.n());
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_3_connected(const Graph& g) {
  if (g.n() < 4) return false;
  const auto adj = g.adjacency();
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      if (!connected_without(adj, a, b)) return false;
  return true;
}

std::vector<std::vector<int>> planar_faces(const SpatialDrawing& planar) {
  const Graph& g = planar.graph;
  auto adj = g.adjacency();
  for (int v = 0; v < g.n(); ++v) {
    const Point3& p = planar.positions[v];
    std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) {
      const Point3 &qa = planar.positions[a], &qb = planar.positions[b];
      return angle_less({qa.x - p.x, qa.y - p.y}, {qb.x - p.x, qb.y - p.y});
    });
  }
  std::map<std::pair<int, int>, char> used;
  std::vector<std::vector<int>> faces;
  for (int s = 0; s < g.n(); ++s)
    for (int t : adj[s]) {
      if (used[{s, t}]) continue;
      std::vector<int> face;
      int u = s, v = t;
      while (!used[{u, v}]) {
        used[{u, v}] = 1;
        face.push_back(u);
        // the face stays on the left: leave v along the edge clockwise after vu
        const auto& nb = adj[v];
        const auto it = std::find(nb.begin(), nb.end(), u);
        const int w = it == nb.begin() ? nb.back() : *(it - 1);
        u = v;
        v = w;
      }
      faces.push_back(std::move(face));
    }
  return faces;
}

namespace {

// Brick-wall hexagonal patch with `rows` hexagons per side; dangling corner
// vertices are trimmed and every remaining degree-2 boundary vertex gets a
// spoke to an outer ring cycle, which makes the graph 3-regular.
SpatialDrawing truncated_hexgrid(int rows) {
  const int cols = 2 * rows + 2;
  auto id = [&](int i, int j) { return j * cols + i; };
  std::vector<std::pair<int, int>> raw;
  for (int j = 0; j <= rows; ++j)
    for (int i = 0; i < cols; ++i) {
      if (i + 1 < cols) raw.emplace_back(id(i, j), id(i + 1, j));
      if (j < rows && (i + j) % 2 == 0) raw.emplace_back(id(i, j), id(i, j + 1));
    }
  const int total = cols * (rows + 1);
  std::vector<int> deg(total, 0);
  std::vector<char> alive(total, 1);
  for (auto [a, b] : raw) ++deg[a], ++deg[b];
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < total; ++v)
      if (alive[v] && deg[v] <= 1) {
        alive[v] = 0;
        changed = true;
        for (auto [a, b] : raw)
          if ((a == v && alive[b]) || (b == v && alive[a])) --deg[a == v ? b : a];
      }
  }
  std::vector<int> local(total, -1);
  std::vector<Point3> pos;
  for (int j = 0; j <= rows; ++j)
    for (int i = 0; i < cols; ++i)
      if (alive[id(i, j)]) {
        local[id(i, j)] = static_cast<int>(pos.size());
        pos.push_back({Rational(i), Rational(3 * j - ((i + j) % 2)), Rational(0)});
      }
  Graph g(static_cast<int>(pos.size()));
  for (auto [a, b] : raw)
    if (alive[a] && alive[b]) g.add_edge(local[a], local[b]);

  // outer ring, ordered by angle around the patch centre
  Point3 c{Rational(cols - 1, 2), Rational(3 * rows - 1, 2), Rational(0)};
  c.x.canonicalize();
  c.y.canonicalize();
  const auto degs = g.degrees();
  std::vector<int> boundary;
  for (int v = 0; v < g.n(); ++v)
    if (degs[v] == 2) boundary.push_back(v);
  std::sort(boundary.begin(), boundary.end(), [&](int a, int b) {
    return angle_less({pos[a].x - c.x, pos[a].y - c.y}, {pos[b].x - c.x, pos[b].y - c.y});
  });
  const int first = g.n();
  Graph full(first + static_cast<int>(boundary.size()), g.edges());
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    const int v = boundary[k];
    pos.push_back(c + Rational(3) * (pos[v] - c));
    full.add_edge(v, first + static_cast<int>(k));
    full.add_edge(first + static_cast<int>(k), first + static_cast<int>((k + 1) % boundary.size()));
  }
  return straight_drawing(std::move(full), std::move(pos));
}

}  // namespace

HexGrid hexgrid_construction(int k, int subdivision, std::uint64_t seed) {
  if (k < 1) throw ValidationError("hexgrid scale k must be at least 1");
  if (subdivision < 1) throw ValidationError("subdivision must be at least 1");
  HexGrid out;
  out.rows = k + 1;
  out.planar = truncated_hexgrid(out.rows);
  const Graph& h = out.planar.graph;
  for (int d : h.degrees())
    if (d != 3) throw InvariantFailure("hexgrid is not 3-regular");
  if (!is_planar(h) || !is_3_connected(h) || count_planar_crossings(out.planar) != 0)
    throw InvariantFailure("hexgrid is not a 3-connected plane graph");

  // u, v: non-adjacent pair maximising the distance between their faces in
  // the dual graph
  const auto faces = planar_faces(out.planar);
  const int nf = static_cast<int>(faces.size());
  std::map<std::pair<int, int>, int> face_of;
  std::vector<std::vector<int>> vertex_faces(h.n());
  for (int f = 0; f < nf; ++f)
    for (std::size_t q = 0; q < faces[f].size(); ++q) {
      face_of[{faces[f][q], faces[f][(q + 1) % faces[f].size()]}] = f;
      vertex_faces[faces[f][q]].push_back(f);
    }
  std::vector<std::vector<int>> dual(nf);
  for (const auto& [uv, f] : face_of) dual[f].push_back(face_of.at({uv.second, uv.first}));
  std::vector<std::vector<int>> dist(nf, std::vector<int>(nf, -1));
  for (int s = 0; s < nf; ++s) {
    std::deque<int> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (int g2 : dual[f])
        if (dist[s][g2] < 0) {
          dist[s][g2] = dist[s][f] + 1;
          queue.push_back(g2);
        }
    }
  }
  int best = -1;
  for (int u = 0; u < h.n(); ++u)
    for (int v = u + 1; v < h.n(); ++v) {
      if (h.has_edge(u, v)) continue;
      int dmin = std::numeric_limits<int>::max();
      for (int f : vertex_faces[u])
        for (int g2 : vertex_faces[v]) dmin = std::min(dmin, dist[f][g2]);
      if (dmin > best) {
        best = dmin;
        out.special_edge = {u, v};
      }
    }
  out.face_distance = best;
  if (best < (out.rows + 3) / 4) throw InvariantFailure("no vertex pair is far enough apart");

  out.drawing = lift_to_sphere(out.planar, {subdivision, seed});
  out.graph = h;
  out.graph.add_edge(out.special_edge.u, out.special_edge.v);
  out.drawing.graph = out.graph;
  out.drawing.bends.emplace_back();
  out.drawing.validate();
  return out;
}

}  // namespace spacecross
