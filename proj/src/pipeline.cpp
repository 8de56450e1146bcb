#include "spacecross/pipeline.hpp"

#include "spacecross/transversal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace spacecross {

bool meets_bisection_bound(std::int64_t e, std::int64_t n, std::int64_t m) {
  // e >= m/4 - sqrt(nm)  <=>  m - 4e <= 0  or  (m - 4e)^2 <= 16 n m
  const std::int64_t gap = m - 4 * e;
  if (gap <= 0) return true;
  return static_cast<__int128>(gap) * gap <= static_cast<__int128>(16) * n * m;
}

Bisection random_bisection(const Graph& g, std::uint64_t seed, int max_retries) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Bisection b;
  b.side.resize(g.n());
  const auto m = static_cast<std::int64_t>(g.m());
  for (b.retries = 1; b.retries <= max_retries; ++b.retries) {
    for (auto& s : b.side) s = coin(rng) ? 1 : 0;
    b.e1 = b.e2 = 0;
    for (const auto& e : g.edges()) {
      if (b.side[e.u] != b.side[e.v]) continue;
      (b.side[e.u] == 0 ? b.e1 : b.e2)++;
    }
    if (meets_bisection_bound(b.e1, g.n(), m) && meets_bisection_bound(b.e2, g.n(), m)) return b;
  }
  throw RetryExhausted("no balanced bisection after " + std::to_string(max_retries) + " colourings");
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& side, int s, std::vector<int>* ids) {
  std::vector<int> local(g.n(), -1);
  std::vector<int> back;
  for (int v = 0; v < g.n(); ++v)
    if (side[v] == s) {
      local[v] = static_cast<int>(back.size());
      back.push_back(v);
    }
  Graph h(static_cast<int>(back.size()));
  for (const auto& e : g.edges())
    if (local[e.u] >= 0 && local[e.v] >= 0) h.add_edge(local[e.u], local[e.v]);
  if (ids) *ids = std::move(back);
  return h;
}

namespace {

constexpr int kFree = -1;
constexpr int kBranch = -2;

int component_count(const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(adj.size(), 0);
  int c = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    ++c;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return c;
}

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, long budget, std::uint64_t seed)
      : g_(g), adj_(g.adjacency()), budget_(budget), rng_(seed), owner_(g.n(), kFree) {}

  std::optional<SubdivisionEmbedding> run() {
    std::vector<int> cands;
    for (int v = 0; v < g_.n(); ++v)
      if (adj_[v].size() >= 5) cands.push_back(v);
    if (cands.size() < 6) return std::nullopt;
    // a K6 subdivision has cycle rank 10
    if (static_cast<long>(g_.m()) - g_.n() + component_count(adj_) < 10) return std::nullopt;
    std::vector<double> weights;
    for (int v : cands) weights.push_back(static_cast<double>(adj_[v].size()));
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    while (budget_ > 0) {
      auto branch = choose_branch(cands[pick(rng_)]);
      if (!branch) continue;
      if (auto emb = route_all(*branch)) {
        emb->validate(g_);
        return emb;
      }
    }
    return std::nullopt;
  }

 private:
  template <class T>
  void shuffled(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

  // The start vertex and the first five other candidates met by a BFS with
  // shuffled neighbour order.
  std::optional<std::array<int, 6>> choose_branch(int start) {
    std::array<int, 6> b{};
    b[0] = start;
    int found = 1;
    std::vector<char> seen(g_.n(), 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty() && found < 6 && budget_ > 0) {
      const int v = queue.front();
      queue.pop_front();
      --budget_;
      auto nb = adj_[v];
      shuffled(nb);
      for (int w : nb) {
        if (seen[w]) continue;
        seen[w] = 1;
        if (adj_[w].size() >= 5 && found < 6) b[found++] = w;
        queue.push_back(w);
      }
    }
    if (found < 6) return std::nullopt;
    return b;
  }

  // Shortest path from a to b whose interior avoids owned vertices and `avoid`.
  std::optional<std::vector<int>> shortest_path(int a, int b, const std::set<int>& avoid) {
    std::vector<int> parent(g_.n(), -2);
    std::deque<int> queue{a};
    parent[a] = -1;
    while (!queue.empty()) {
      if (--budget_ <= 0) return std::nullopt;
      const int v = queue.front();
      queue.pop_front();
      auto nb = adj_[v];
      shuffled(nb);
      for (int w : nb) {
        if (parent[w] != -2) continue;
        if (w == b) {
          if (v == a) continue;  // direct edges are routed separately
          std::vector<int> path{b};
          for (int x = v; x != -1; x = parent[x]) path.push_back(x);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (owner_[w] != kFree || avoid.count(w)) continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    return std::nullopt;
  }

  bool route(const std::vector<int>& order, std::size_t at, SubdivisionEmbedding& emb) {
    if (at == order.size()) return true;
    if (budget_ <= 0) return false;
    const int k = order[at];
    const int i = pair_i_[k], j = pair_j_[k];
    std::set<int> avoid;
    for (int alt = 0; alt < 2; ++alt) {
      auto path = shortest_path(emb.branch[i], emb.branch[j], avoid);
      if (!path) return false;
      for (std::size_t q = 1; q + 1 < path->size(); ++q) owner_[(*path)[q]] = k;
      emb.paths[k] = *path;
      if (route(order, at + 1, emb)) return true;
      for (std::size_t q = 1; q + 1 < path->size(); ++q) {
        owner_[(*path)[q]] = kFree;
        avoid.insert((*path)[q]);
      }
      if (budget_ <= 0) return false;
    }
    return false;
  }

  std::optional<SubdivisionEmbedding> route_all(const std::array<int, 6>& branch) {
    std::fill(owner_.begin(), owner_.end(), kFree);
    SubdivisionEmbedding emb;
    emb.branch = branch;
    for (int v : branch) owner_[v] = kBranch;
    std::vector<int> order;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        const int k = SubdivisionEmbedding::pair_index(i, j);
        pair_i_[k] = i;
        pair_j_[k] = j;
        if (g_.has_edge(branch[i], branch[j])) emb.paths[k] = {branch[i], branch[j]};
        else order.push_back(k);
      }
    shuffled(order);
    if (!route(order, 0, emb)) return std::nullopt;
    return emb;
  }

  const Graph& g_;
  std::vector<std::vector<int>> adj_;
  long budget_;
  std::mt19937_64 rng_;
  std::vector<int> owner_;
  std::array<int, 15> pair_i_{}, pair_j_{};
};

}  // namespace

std::optional<SubdivisionEmbedding> find_k6_subdivision(const Graph& g, long budget, std::uint64_t seed) {
  return SubdivisionSearch(g, budget, seed).run();
}

std::vector<SubdivisionEmbedding> extract_disjoint_subdivisions(const Graph& g, long budget, std::uint64_t seed) {
  std::vector<SubdivisionEmbedding> out;
  std::set<std::pair<int, int>> removed;
  Graph cur = g;
  for (std::uint64_t round = 0;; ++round) {
    auto emb = find_k6_subdivision(cur, budget, seed + round);
    if (!emb) break;
    for (const auto& p : emb->paths)
      for (std::size_t q = 0; q + 1 < p.size(); ++q) removed.insert(std::minmax(p[q], p[q + 1]));
    out.push_back(std::move(*emb));
    std::vector<Edge> keep;
    for (const auto& e : g.edges())
      if (!removed.count(std::minmax(e.u, e.v))) keep.push_back(e);
    cur = Graph(g.n(), std::move(keep));
  }
  return out;
}

namespace {

// Vertex sequence of the cycle of triangle `tri`, in the order the topology
// module traces it; segment q joins entries q and q + 1.
std::vector<int> cycle_vertices(const SubdivisionEmbedding& s, const std::array<int, 3>& tri) {
  std::vector<int> out;
  for (int leg = 0; leg < 3; ++leg) {
    const int i = tri[leg], j = tri[(leg + 1) % 3];
    std::vector<int> path = s.paths[SubdivisionEmbedding::pair_index(i, j)];
    if (i > j) std::reverse(path.begin(), path.end());
    out.insert(out.end(), path.begin(), path.end() - 1);
  }
  return out;
}

struct LinkedCycles {
  std::array<PolygonalCycle, 2> cycles;
  std::array<std::vector<int>, 2> vertices;
};

}  // namespace

BoostReport boost_witness_pipeline(const SpatialDrawing& d, const BoostOptions& opt) {
  d.validate();
  if (!d.straight()) throw ValidationError("boost pipeline expects a straight-line drawing");
  const Graph& g = d.graph;
  BoostReport rep;
  if (opt.sides) {
    if (static_cast<int>(opt.sides->size()) != g.n()) throw ValidationError("sides must list every vertex");
    rep.bisection.side = *opt.sides;
    for (const auto& e : g.edges())
      if (rep.bisection.side[e.u] == rep.bisection.side[e.v]) (rep.bisection.side[e.u] == 0 ? rep.bisection.e1 : rep.bisection.e2)++;
  } else {
    rep.bisection = random_bisection(g, opt.seed);
  }

  std::map<std::pair<int, int>, int> edge_id;
  for (int e = 0; e < static_cast<int>(g.m()); ++e) edge_id[std::minmax(g.edges()[e].u, g.edges()[e].v)] = e;

  std::array<std::vector<LinkedCycles>, 2> linked;
  for (int s = 0; s < 2; ++s) {
    std::vector<int> ids;
    const Graph h = induced_subgraph(g, rep.bisection.side, s, &ids);
    for (auto emb : extract_disjoint_subdivisions(h, opt.budget, opt.seed + 1000003 * (s + 1))) {
      for (auto& b : emb.branch) b = ids[b];
      for (auto& p : emb.paths)
        for (auto& v : p) v = ids[v];
      const LinkedPair lp = find_linked_pair(d, emb);
      linked[s].push_back({{lp.first, lp.second},
                           {cycle_vertices(emb, lp.triangles.first), cycle_vertices(emb, lp.triangles.second)}});
      rep.subdivisions[s].push_back(std::move(emb));
    }
  }

  const int n0 = static_cast<int>(linked[0].size()), n1 = static_cast<int>(linked[1].size());
  std::vector<std::optional<CrossingWitness>> found(static_cast<std::size_t>(n0) * n1);
  std::vector<char> violated(found.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < n0 * n1; ++idx) {
    const LinkedCycles& a = linked[0][idx / n1];
    const LinkedCycles& b = linked[1][idx % n1];
    const std::array<const LinkedCycles*, 4> owner = {&a, &a, &b, &b};
    const CycleTransversal t = transversal_through_cycles({a.cycles[0], a.cycles[1], b.cycles[0], b.cycles[1]});
    violated[idx] = t.lemma_violation;
    if (!t.witness) continue;
    std::vector<std::pair<int, QuadExt>> hits;
    for (int c = 0; c < 4; ++c) {
      const auto& vs = owner[c]->vertices[c % 2];
      const int q = t.witness->segment_index[c];
      const int e = edge_id.at(std::minmax(vs[q], vs[(q + 1) % vs.size()]));
      auto param = meet_parameter(*t.witness->line, d.segments(e).front());
      if (!param) throw InvariantFailure("witness line misses edge " + std::to_string(e));
      hits.emplace_back(e, std::move(*param));
    }
    std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    CrossingWitness w;
    w.line = t.witness->line;
    for (auto& [e, p] : hits) {
      w.edges.push_back(e);
      w.segment_index.push_back(0);
      w.params.push_back(std::move(p));
    }
    found[idx] = std::move(w);
  }

  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < found.size(); ++i) {
    ++rep.pairs_searched;
    rep.lemma_violations += violated[i];
    if (found[i] && seen.insert(found[i]->edges).second) rep.witnesses.push_back(std::move(*found[i]));
  }
  return rep;
}

}  // namespace spacecross
