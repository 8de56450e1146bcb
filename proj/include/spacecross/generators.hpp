#pragma once

// Seeded fixtures. Every generator is a pure function of its arguments.

#include "spacecross/pipeline.hpp"
#include "spacecross/sametype.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace spacecross {

/// Uniform rational in [0, 1]: p/q with q uniform in [1, den], p in [0, q].
Rational random_unit_rational(std::mt19937_64& rng, long den);

/// Points in the unit cube with denominators at most `den`.
std::vector<Point3> random_points(int count, long den, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Uniform simple graph with exactly m edges; ValidationError if m > C(n, 2).
Graph random_graph_nm(int n, std::int64_t m, std::uint64_t seed);

/// Straight-line drawing in z = 0 of a random graph with m edges; positions
/// have denominators at most `den`. No vertex lies on a foreign edge.
SpatialDrawing random_planar_drawing(int n, std::int64_t m, long den, std::uint64_t seed);

/// Straight-line drawing in R^3 of a random graph; no 4 vertices coplanar.
SpatialDrawing random_spatial_drawing(int n, std::int64_t m, long den, std::uint64_t seed);

/// Two interlocked squares with lk = +1; `offset` translates both along z.
std::array<PolygonalCycle, 2> hopf_pair(long offset = 0);

/// Hopf pairs at z = 0 and z = gap, sharing the z-axis.
std::array<PolygonalCycle, 4> stacked_hopf_pairs(long gap = 10);

struct K6Fixture {
  SpatialDrawing drawing;
  std::vector<int> sides;  // copies [0, per_side) on side 0, the rest on side 1
};

/// 2 * per_side vertex-disjoint K6 copies, each in a small random cluster of
/// its own; positions are in general position within every copy.
K6Fixture disjoint_k6_fixture(int per_side, std::uint64_t seed);

/// n points in [-1, 1]^dim with denominators at most `den`; repeats are likely
/// for small `den`.
PointMultiset random_multiset(int dim, int n, long den, std::uint64_t seed);

struct SameTypeInstance {
  std::vector<PointMultiset> sets;
  std::vector<SparsePolynomial> polys;
};

/// k = 2 blocks of dimension 1 or 2, one or two polynomials whose last block
/// has at most two non-constant monomials, `n` points per multiset.
SameTypeInstance random_same_type_instance(int n, std::uint64_t seed);

}  // namespace spacecross
