#pragma once

// Stretched grids, stair-paths, the standard (stair-)drawing of the interval
// graph, stair-crossings, and the order-type count behind the cubic-free bound.

#include "spacecross/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace spacecross {

/// Grid of n points per axis in dimension d. In index-only mode coordinates
/// are the indices themselves; with explicit growth they are exact rationals.
class StretchedGrid {
 public:
  /// Index-only grid.
  StretchedGrid(int d, int n);
  /// Default explicit growth for d = 3: x1j = j, x2j = B^(j-1), x3j = B^((j-1) M)
  /// with B = 2^64 and M = 16 n.
  static StretchedGrid explicit_default(int n);
  /// Caller-supplied sequences, validated strictly increasing from 1.
  StretchedGrid(std::vector<std::vector<Rational>> axes);

  int d() const { return d_; }
  int n() const { return n_; }
  bool is_explicit() const { return !axes_.empty(); }
  /// x_{axis, j} for 1 <= j <= n (index value in index-only mode).
  Rational coord(int axis, int j) const;
  Point3 point(const std::array<int, 3>& idx) const;
  /// Diagonal point p(i).
  Point3 diagonal(int i) const { return point({i, i, i}); }

  /// Closed interval of values 1-close to v on the given axis: no grid value
  /// lies strictly between v and any member. Open ends are reported as nullopt.
  std::pair<std::optional<Rational>, std::optional<Rational>> close_range(int axis, const Rational& v) const;

 private:
  int d_ = 3;
  int n_ = 0;
  std::vector<std::vector<Rational>> axes_;
};

using GridPoint = std::vector<int>;

/// Least k such that the points are k-close: max(1, max |index difference|).
int grid_distance(const StretchedGrid& g, const GridPoint& a, const GridPoint& b);

struct StairSegment {
  std::vector<Rational> from, to;
  int axis = 0;  // the only coordinate that changes
};

struct StairPath {
  std::vector<Rational> a, b;
  std::vector<StairSegment> segments;  // ordered from a to b; empty when a == b
};

/// The recursive stair-path; the last coordinate is resolved first.
StairPath stair_path(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Edges {i, j} with 1 <= |i - j| <= D on vertices 1..n (ids 0..n-1), where
/// D = ceil(2m / n).
Graph interval_graph(int n, std::int64_t m);
int interval_D(int n, std::int64_t m);

struct StandardStairDrawing {
  Graph graph;
  std::vector<int> diagonal_index;  // vertex id -> i with the vertex at p(i)
  std::vector<StairPath> edge_paths;  // in index coordinates
};

/// Vertex v (1-based) at p(5v); every edge is a stair-path. The grid needs at
/// least 5n points per axis.
StandardStairDrawing standard_stair_drawing(int n, std::int64_t m, const StretchedGrid& g);

/// The same graph as a straight-line drawing at the grid's coordinates.
SpatialDrawing standard_straight_drawing(int n, std::int64_t m, const StretchedGrid& g);

/// Box of points 1-close to p on the grid (open ends as nullopt).
using CloseBox = std::array<std::pair<std::optional<Rational>, std::optional<Rational>>, 3>;
CloseBox close_box(const StretchedGrid& g, const Point3& p);

/// Some point of the closed segment ab is 1-close to p.
bool close_to_segment(const StretchedGrid& g, const Point3& p, const Point3& a, const Point3& b);
/// Some point of the stair-path is 1-close to p.
bool close_to_stair_path(const StretchedGrid& g, const Point3& p, const StairPath& path);

enum class StairLineType { L1, L2, L3 };

struct StairLine {
  StairLineType type = StairLineType::L1;
  // L1, L2: (x0, y0, y1, z1); L3: (x0, y0, x1, z1). Rank coordinates.
  std::array<int, 4> c{};
};

/// Axis-parallel pieces of a stair-line as boxes [lo, hi]^3; +-inf ends are
/// encoded by the sentinels kMinusInf / kPlusInf.
inline constexpr int kMinusInf = -1000000;
inline constexpr int kPlusInf = 1000000;
using IntBox = std::array<std::array<int, 2>, 3>;
std::vector<IntBox> stair_line_pieces(const StairLine& l, int floor_z);

struct StairCrossing {
  bool exists = false;
  std::optional<StairLine> witness;  // in rank coordinates, see rank_values
  std::vector<int> rank_values;      // rank r corresponds to this anchor value
};

/// Decides whether a stair-line meets the four stair-paths
/// sigma((s,s,s), (t,t,t)) for the given anchor pairs. Anchors must be distinct.
StairCrossing stair_crossing_exists(const std::array<std::array<int, 2>, 4>& anchors);
/// Same, for paths between diagonal points with integer coordinates.
StairCrossing stair_crossing_exists(const std::array<StairPath, 4>& paths);

/// Every interval meets another one (the necessary pairing condition).
bool pairing_condition(const std::array<std::array<int, 2>, 4>& anchors);

struct OrderType {
  std::array<std::array<int, 2>, 4> pairs;  // positions 1..8, each pair ascending
  int components = 0;
};

/// All 105 perfect matchings of 1..8 with their component counts.
std::vector<OrderType> enumerate_order_types();

/// Components of the union of the intervals spanned by the matching.
int interval_components(const std::array<std::array<int, 2>, 4>& pairs);

/// Disjoint edge quadruples of interval_graph(n, m) whose interval union has at
/// most two components, and the same split per order type (index into
/// enumerate_order_types()).
struct CandidateCount {
  std::int64_t count = 0;
  std::vector<std::int64_t> per_type;
};
CandidateCount count_candidate_quadruples(int n, std::int64_t m);

/// Brute force over disjoint quadruples; the reference for the above.
std::int64_t count_candidate_quadruples_serial(int n, std::int64_t m);

/// Per-n table: for each D in 0..n, the candidate count of interval_graph with
/// that D. Shares one pass over 8-subsets among all D.
std::vector<std::int64_t> candidate_counts_by_D(int n);

}  // namespace spacecross
