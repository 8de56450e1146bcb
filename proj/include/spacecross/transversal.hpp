#pragma once

// Line transversals to lines and to closed segments, decided exactly.

#include "spacecross/geometry.hpp"
#include "spacecross/interval.hpp"

#include <optional>
#include <span>
#include <vector>

namespace spacecross {

struct TransversalsOf4 {
  bool infinite = false;
  std::vector<AlgebraicLine> lines;  // at most two, empty when infinite
};

/// Real lines meeting four lines (meeting includes parallelism, as in
/// projective space, but lines at infinity are excluded).
TransversalsOf4 transversals_of_4_lines(const std::array<PlueckerLine, 4>& lines);

struct SegmentTransversal {
  bool exists = false;
  std::optional<AlgebraicLine> line;
  std::vector<QuadExt> params;  // intersection parameter on each input segment
};

/// Decides whether some line meets every closed segment (3 or 4 of them).
/// A positive answer carries a witness line that has been re-verified.
SegmentTransversal transversal_exists_segments(std::span<const Segment3> segs);

/// Re-checks a candidate: the line meets each closed segment; writes the
/// parameters on success.
bool line_meets_segments(const AlgebraicLine& line, std::span<const Segment3> segs,
                         std::vector<QuadExt>* params = nullptr);

/// Parameter in [0, 1] at which the line meets segment s, if it does.
std::optional<QuadExt> meet_parameter(const AlgebraicLine& line, const Segment3& s);

/// Three-valued answer of the filtered predicates.
enum class Verdict { No, Yes, Unknown };

/// Certified interval-arithmetic filter for four segments. Yes and No are
/// mathematically certain; Unknown means the exact path must decide.
Verdict transversal_filter(std::span<const Segment3, 4> segs);

/// Same filter with MPFR endpoints (mantissa of 256, 1024 or 4096 bits, the
/// least one covering `bits`) and an unbounded exponent; used when the double
/// filter is inconclusive, e.g. on stretched-grid coordinates.
Verdict transversal_filter_wide(std::span<const Segment3, 4> segs, int bits = 256);

using Box3 = Vec3<Interval>;

/// The filter on boxes: segment i is any [p, q] with p in lo[i], q in hi[i].
/// No means no choice of endpoints inside the boxes admits a transversal.
Verdict transversal_filter_boxes(std::span<const Box3, 4> lo, std::span<const Box3, 4> hi);

Box3 box_of(const Point3& p);

/// Plain double evaluation with an absolute zero tolerance. Not certified.
Verdict transversal_float(std::span<const Vec3<double>, 8> endpoints, double tol);

enum class Contact2D { Disjoint, Crossing, Touching };

/// Crossing means the relative interiors meet transversally in one point.
Contact2D segments_intersect_2d(const Point2& a0, const Point2& a1, const Point2& b0, const Point2& b1);

}  // namespace spacecross
