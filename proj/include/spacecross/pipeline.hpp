#pragma once

// Graph-level procedures: balanced random bisection, heuristic K6-subdivision
// search, the linked-cycle witness pipeline and the hexagonal-grid drawing.

#include "spacecross/topology.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace spacecross {

struct Bisection {
  std::vector<int> side;  // 0 or 1 per vertex
  std::int64_t e1 = 0, e2 = 0;
  int retries = 0;  // colourings drawn, including the accepted one
};

/// True iff e >= m/4 - sqrt(n m), decided in integers.
bool meets_bisection_bound(std::int64_t e, std::int64_t n, std::int64_t m);

/// Fair random 2-colourings until both induced edge counts meet the bound;
/// RetryExhausted after `max_retries`.
Bisection random_bisection(const Graph& g, std::uint64_t seed, int max_retries = 1000);

/// Subgraph induced on the vertices with side[v] == s; `ids` receives the
/// original vertex id of each new vertex.
Graph induced_subgraph(const Graph& g, const std::vector<int>& side, int s, std::vector<int>* ids);

/// Randomised backtracking search within `budget` vertex expansions. No result
/// does not prove that no subdivision exists.
std::optional<SubdivisionEmbedding> find_k6_subdivision(const Graph& g, long budget, std::uint64_t seed);

/// Greedy: find, delete the found edges, repeat. Results are edge-disjoint.
std::vector<SubdivisionEmbedding> extract_disjoint_subdivisions(const Graph& g, long budget, std::uint64_t seed);

struct BoostOptions {
  std::uint64_t seed = 0;
  long budget = 200000;
  std::optional<std::vector<int>> sides;  // fixed split instead of random_bisection
};

struct BoostReport {
  Bisection bisection;
  std::array<std::vector<SubdivisionEmbedding>, 2> subdivisions;
  std::vector<CrossingWitness> witnesses;  // edges ascending, pairwise distinct
  int pairs_searched = 0;
  int lemma_violations = 0;
};

/// Straight-line drawings only.
BoostReport boost_witness_pipeline(const SpatialDrawing& d, const BoostOptions& opt = {});

struct HexGrid {
  Graph graph;  // H plus the chord uv as the last edge
  Edge special_edge;
  SpatialDrawing planar;   // H alone, straight-line in z = 0
  SpatialDrawing drawing;  // H lifted onto the sphere, chord uv straight
  int rows = 0;
  int face_distance = 0;
};

/// rows = k + 1 hexagons per side; see the README for the truncation rule.
HexGrid hexgrid_construction(int k, int subdivision, std::uint64_t seed = 0);

bool is_connected(const Graph& g);
bool is_planar(const Graph& g);
/// Brute force over vertex pairs; intended for small graphs.
bool is_3_connected(const Graph& g);

/// Faces of a crossing-free straight-line drawing in z = 0, each as the
/// vertex cycle traced with the face on the left.
std::vector<std::vector<int>> planar_faces(const SpatialDrawing& planar);

}  // namespace spacecross
