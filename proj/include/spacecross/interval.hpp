#pragma once

#include "spacecross/rational.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

namespace spacecross {

/// Closed interval of doubles that encloses an exact real value.
///
/// Each operation rounds to nearest and then widens outward by one ulp, which
/// keeps the enclosure valid without switching the FPU rounding mode. Any NaN
/// collapses to the whole real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  constexpr Interval(double l, double h) : lo(l), hi(h) {}
  explicit Interval(double v) : lo(v), hi(v) {}

  static Interval entire() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {-inf, inf};
  }

  static Interval from(const Rational& r) {
    if (sgn(r) == 0) return Interval(0.0);
    if (r.get_den() == 1 && mpz_sizeinbase(r.get_num_mpz_t(), 2) <= 53)
      return Interval(r.get_num().get_d());
    double v = r.get_d();
    return widen(v, v);
  }

  /// Certain sign, or nullopt when the interval straddles zero.
  std::optional<int> sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return std::nullopt;
  }

  double magnitude() const { return std::max(std::fabs(lo), std::fabs(hi)); }
  double mid() const { return 0.5 * (lo + hi); }

  static Interval widen(double l, double h) {
    if (std::isnan(l) || std::isnan(h)) return entire();
    return {step_down(l), step_up(h)};
  }

  // One ulp toward +infinity; libm nextafter is far slower on this hot path.
  static double step_up(double x) {
    if (x == 0) return std::numeric_limits<double>::denorm_min();
    if (std::isinf(x)) return x > 0 ? x : -std::numeric_limits<double>::max();
    auto bits = std::bit_cast<std::uint64_t>(x);
    bits = x > 0 ? bits + 1 : bits - 1;
    return std::bit_cast<double>(bits);
  }
  static double step_down(double x) { return -step_up(-x); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return widen(a.lo + b.lo, a.hi + b.hi);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return widen(a.lo - b.hi, a.hi - b.lo);
  }
  Interval operator-() const { return {-hi, -lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    if ((a.lo == 0 && a.hi == 0) || (b.lo == 0 && b.hi == 0)) return Interval(0.0);
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    if (std::isnan(p1) || std::isnan(p2) || std::isnan(p3) || std::isnan(p4)) return entire();
    return widen(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (!(b.lo > 0 || b.hi < 0)) return entire();
    double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    if (std::isnan(p1) || std::isnan(p2) || std::isnan(p3) || std::isnan(p4)) return entire();
    return widen(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend Interval sqrt(const Interval& a) {
    double l = std::max(a.lo, 0.0);
    double h = std::max(a.hi, 0.0);
    if (l == 0 && h == 0) return Interval(0.0);
    return widen(std::sqrt(l), std::sqrt(h)).clamp_nonneg();
  }

  Interval clamp_nonneg() const { return {std::max(lo, 0.0), hi}; }

  friend Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }
  friend bool overlaps(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }
};

}  // namespace spacecross
