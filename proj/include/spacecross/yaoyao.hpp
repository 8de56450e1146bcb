#pragma once

// Yao-Yao partitions in dimensions 1 and 2: a center and 2^d closed cones,
// each holding at least |F| / 2^d of the points, such that every closed
// halfspace through the center contains a whole cone.

#include "spacecross/polynomial.hpp"

#include <vector>

namespace spacecross {

struct PointMultiset {
  int dim = 0;
  std::vector<BlockPoint> points;  // repeats allowed

  int size() const { return static_cast<int>(points.size()); }
  void validate() const;
};

struct YaoYaoCell {
  std::vector<int> generators;  // indices into YaoYaoPartition::generators, counterclockwise
  std::vector<int> simplex;     // indices into YaoYaoPartition::vertices; simplex[0] is the center
  std::vector<int> members;     // points of the multiset inside the closed cone
};

struct YaoYaoPartition {
  int dim = 0;
  BlockPoint center;
  std::vector<BlockPoint> generators;  // 2 in 1D, 4 in 2D, counterclockwise
  std::vector<BlockPoint> vertices;    // center, then center + scale * generator
  Rational scale;                      // every member lies in its cell's simplex
  std::vector<YaoYaoCell> cells;
  bool perturbed = false;  // built on the perturbed multiset

  /// Closed-cone membership.
  bool in_cell(int cell, const BlockPoint& p) const;
  /// Barycentric weights of p over cell's simplex vertices (may be negative outside).
  std::vector<Rational> barycentric(int cell, const BlockPoint& p) const;
};

struct YaoYaoOptions {
  bool force_perturbation = false;  // skip the exact search (testing hook)
};

/// d = F.dim in {1, 2}; PreconditionViolated if |F| < 2^d or d is out of range.
/// Invariants are re-checked exactly before returning.
YaoYaoPartition yao_yao_partition(const PointMultiset& F, const YaoYaoOptions& opt = {});

/// Point i moved by (e, e^2) with e = (i + 1) * 2^-64; 2D only.
PointMultiset perturb_multiset(const PointMultiset& F);

/// Exact check of the three invariants against F: cells cover the space with
/// disjoint interiors, each has >= |F| / 2^d members, and every closed
/// halfspace containing the center contains a cell (rotating sweep in 2D).
bool cells_cover_space(const YaoYaoPartition& p);
bool cells_meet_count(const YaoYaoPartition& p, const PointMultiset& F);
bool halfspace_property(const YaoYaoPartition& p);

}  // namespace spacecross
