#pragma once

// Space crossings (k = 4) and triple crossings (k = 3) of spatial drawings,
// planar crossing counts, and the lift of planar drawings onto a sphere.

#include "spacecross/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace spacecross {

enum class Mode { Exact, Float };

/// k-sets of pairwise vertex-disjoint edge ids, lexicographically ascending.
std::vector<std::vector<int>> enumerate_disjoint_tuples(const Graph& g, int k);

struct CrossingWitness {
  std::vector<int> edges;
  std::optional<AlgebraicLine> line;  // absent in float mode
  std::vector<int> segment_index;     // which polyline segment of each edge is met
  std::vector<QuadExt> params;        // parameter on that segment (exact mode)
};

struct CrossingOptions {
  int k = 4;
  Mode mode = Mode::Exact;
  double tol = 1e-9;
  bool witnesses = false;
  bool certify = false;  // float mode: re-check each positive exactly
  int threads = 0;  // 0 keeps the OpenMP default
};

struct CrossingReport {
  Mode mode = Mode::Exact;
  int k = 4;
  std::int64_t count = 0;
  std::int64_t tuples = 0;
  std::vector<CrossingWitness> witnesses;
  double seconds = 0;
};

/// Parallel counter. Polyline tuples are searched by branch and bound over
/// sub-chains, pruned with the certified box filter.
CrossingReport count_line_crossings(const SpatialDrawing& d, const CrossingOptions& opt = {});

/// Single-threaded reference: every segment combination of every tuple is
/// tested directly.
CrossingReport count_line_crossings_serial(const SpatialDrawing& d, const CrossingOptions& opt = {});

/// Witness for one tuple of edges, if the edges admit a common transversal.
std::optional<CrossingWitness> tuple_crossing(const SpatialDrawing& d, const std::vector<int>& edges,
                                              Mode mode = Mode::Exact, double tol = 1e-9);

/// Common transversal of four polylines (one segment of each), found by branch
/// and bound; the witness has no edge ids.
std::optional<CrossingWitness> polyline_transversal(const std::array<std::vector<Point3>, 4>& chains);

/// Re-checks a witness from scratch with the exact predicate.
bool verify_witness(const SpatialDrawing& d, const CrossingWitness& w);

/// Pairs of vertex-disjoint edges whose interiors cross, for a straight-line
/// drawing in the plane z = 0.
std::int64_t count_planar_crossings(const SpatialDrawing& d);

struct LiftParams {
  int subdivision = 8;
  std::uint64_t seed = 0;
};

/// Inverse stereographic lift onto a sphere tangent to z = 0 at the bounding
/// box center, radius 2^16 times the box diameter. Interior subdivision points
/// are jittered in the plane before lifting, so every point stays on the sphere.
SpatialDrawing lift_to_sphere(const SpatialDrawing& planar, const LiftParams& p = {});

/// Exact image of a plane point (x, y, 0) on the sphere with the given tangent
/// point c and radius r.
Point3 stereographic_lift(const Point3& x, const Point3& c, const Rational& r);

}  // namespace spacecross
