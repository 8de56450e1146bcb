#pragma once

// Linking numbers of polygonal cycles, the Conway-Gordon parity check for
// straight-line K6, and transversals through four cycles.

#include "spacecross/crossing.hpp"

#include <array>
#include <optional>
#include <vector>

namespace spacecross {

/// Closed polyline; the last point connects back to the first.
struct PolygonalCycle {
  std::vector<Point3> points;

  std::size_t size() const { return points.size(); }
  Segment3 segment(std::size_t i) const { return {points[i], points[(i + 1) % points.size()]}; }
  /// Throws ValidationError unless there are >= 3 points, consecutive points
  /// differ and the closed polyline does not touch itself.
  void validate() const;
};

/// True when two closed 3D segments share a point.
bool segments_touch_3d(const Segment3& a, const Segment3& b);

/// Signed crossings where c1 passes over c2, projecting along (1, t, t^2) and
/// viewing from that direction. Empty if the direction is not generic for the
/// pair. Inputs are assumed valid and disjoint.
std::optional<int> linking_number_along(const PolygonalCycle& c1, const PolygonalCycle& c2, long t);

/// Smallest t >= 1 giving a generic projection; RetryExhausted after `max_t`.
long generic_direction(const PolygonalCycle& c1, const PolygonalCycle& c2, long max_t = 100000);

/// Validates both cycles, throws NotDisjoint if they meet.
int linking_number(const PolygonalCycle& c1, const PolygonalCycle& c2);

struct TrianglePair {
  std::array<int, 3> first;
  std::array<int, 3> second;
  int lk = 0;
};

struct ConwayGordonResult {
  TrianglePair odd_pair;
  int parity_sum = 0;
  std::array<TrianglePair, 10> pairs;
};

/// The 10 splits of {0..5} into two triples, the first always holding 0.
std::array<std::pair<std::array<int, 3>, std::array<int, 3>>, 10> k6_triangle_splits();

/// Throws DegeneratePosition if four of the points are coplanar, and
/// InvariantFailure if the parity of the 10 linking numbers is even.
ConwayGordonResult conway_gordon_check(const std::array<Point3, 6>& points);

/// Subdivision of K6 inside a graph: paths[k] runs from branch[i] to branch[j]
/// for the k-th pair i < j in lexicographic order.
struct SubdivisionEmbedding {
  std::array<int, 6> branch{};
  std::array<std::vector<int>, 15> paths;

  static int pair_index(int i, int j);
  /// Throws ValidationError on wrong endpoints, missing edges or paths that
  /// share interior vertices.
  void validate(const Graph& g) const;
};

struct LinkedPair {
  TrianglePair triangles;
  PolygonalCycle first, second;
  std::array<int, 10> lks{};
};

/// Cycle of the K6 triangle (i, j, k) traced through the drawing.
PolygonalCycle subdivision_cycle(const SpatialDrawing& d, const SubdivisionEmbedding& s, const std::array<int, 3>& tri);

/// Cycle pair over disjoint branch triangles with odd linking number.
LinkedPair find_linked_pair(const SpatialDrawing& d, const SubdivisionEmbedding& s);

struct CycleTransversal {
  std::optional<CrossingWitness> witness;  // segment_index refers to cycle segments
  bool linked_hypothesis = false;          // lk(c1, c2) != 0 and lk(c3, c4) != 0
  bool lemma_violation = false;            // hypothesis held but no line was found
};

/// Throws NotDisjoint if two of the cycles meet.
CycleTransversal transversal_through_cycles(const std::array<PolygonalCycle, 4>& c);

}  // namespace spacecross
