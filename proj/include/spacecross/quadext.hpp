#pragma once

#include "spacecross/rational.hpp"

#include <string>

namespace spacecross {

/// a + b*sqrt(d) with rational a, b and d >= 0.
///
/// Values whose radicand is a rational square (or whose b is zero) collapse to
/// the pure rational form (b = d = 0). Arithmetic between two irrational values
/// requires equal radicands; mixing radicands is a logic error since every
/// computation here stays inside one quadratic field Q(sqrt(d)).
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT: implicit embedding of Q
  QuadExt(long a) : a_(a) {}             // NOLINT
  QuadExt(Rational a, Rational b, Rational d);

  /// a + b sqrt(d) for a radicand already known not to be a rational square.
  static QuadExt irrational(Rational a, Rational b, Rational d) {
    QuadExt q(std::move(a), std::move(b), std::move(d), Raw{});
    q.collapse_if_rational();
    return q;
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  double to_double() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Raw{}); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }

  friend bool operator==(const QuadExt& l, const QuadExt& r) { return (l - r).sign() == 0; }
  friend bool operator<(const QuadExt& l, const QuadExt& r) { return (l - r).sign() < 0; }
  friend bool operator<=(const QuadExt& l, const QuadExt& r) { return (l - r).sign() <= 0; }

 private:
  struct Raw {};
  QuadExt(Rational a, Rational b, Rational d, Raw) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  void normalize();
  void collapse_if_rational();
  const Rational& common_radicand(const QuadExt& o) const;
  void adopt_radicand(const QuadExt& o);

  Rational a_{0};
  Rational b_{0};
  Rational d_{0};
};

inline int sign(const QuadExt& q) { return q.sign(); }

}  // namespace spacecross
