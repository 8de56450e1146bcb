#include "spacecross/quadext.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace spacecross {

QuadExt::QuadExt(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw std::domain_error("QuadExt: negative radicand");
  normalize();
}

void QuadExt::collapse_if_rational() {
  if (sgn(b_) == 0 || sgn(d_) == 0) {
    b_ = 0;
    d_ = 0;
  }
}

void QuadExt::normalize() {
  collapse_if_rational();
  if (is_rational()) return;
  Rational root;
  if (rational_sqrt(d_, root)) {
    a_ += b_ * root;
    b_ = 0;
    d_ = 0;
  }
}

const Rational& QuadExt::common_radicand(const QuadExt& o) const {
  if (is_rational()) return o.d_;
  if (o.is_rational() || d_ == o.d_) return d_;
  throw std::logic_error("QuadExt: mixed radicands");
}

void QuadExt::adopt_radicand(const QuadExt& o) {
  if (o.is_rational()) return;
  if (is_rational()) d_ = o.d_;
  else if (d_ != o.d_) throw std::logic_error("QuadExt: mixed radicands");
}

namespace {

// Certified comparison of |a| against |b| sqrt(d) at 128 bits; 0 when the
// enclosures overlap.
int compare_filtered(const Rational& a, const Rational& b, const Rational& d) {
  mpfr_t alo, ahi, blo, bhi, t;
  for (auto* x : {&alo, &ahi, &blo, &bhi, &t}) mpfr_init2(*x, 128);
  mpfr_set_q(alo, a.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(ahi, a.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(alo, alo, MPFR_RNDD);
  mpfr_abs(ahi, ahi, MPFR_RNDU);
  if (mpfr_greater_p(alo, ahi)) mpfr_swap(alo, ahi);
  mpfr_set_q(blo, b.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(bhi, b.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(blo, blo, MPFR_RNDD);
  mpfr_abs(bhi, bhi, MPFR_RNDU);
  if (mpfr_greater_p(blo, bhi)) mpfr_swap(blo, bhi);
  mpfr_set_q(t, d.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(t, t, MPFR_RNDD);
  mpfr_mul(blo, blo, t, MPFR_RNDD);
  mpfr_set_q(t, d.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(t, t, MPFR_RNDU);
  mpfr_mul(bhi, bhi, t, MPFR_RNDU);
  int r = 0;
  if (mpfr_greater_p(alo, bhi)) r = 1;
  else if (mpfr_less_p(ahi, blo)) r = -1;
  for (auto* x : {&alo, &ahi, &blo, &bhi, &t}) mpfr_clear(*x);
  return r;
}

}  // namespace

int QuadExt::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 against b^2 d
  if (int f = compare_filtered(a_, b_, d_); f != 0) return f > 0 ? sa : sb;
  int cmp_ = cmp(a_ * a_, b_ * b_ * d_);
  if (cmp_ > 0) return sa;
  if (cmp_ < 0) return sb;
  return 0;
}

double QuadExt::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  adopt_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  collapse_if_rational();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  adopt_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  collapse_if_rational();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    collapse_if_rational();
    return *this;
  }
  adopt_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  collapse_if_rational();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.sign() == 0) throw std::domain_error("QuadExt: division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    collapse_if_rational();
    return *this;
  }
  // multiply by the conjugate; the norm a^2 - b^2 d is a nonzero rational
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
  QuadExt conj(o.a_ / norm, -o.b_ / norm, o.d_, Raw{});
  return *this *= conj;
}

}  // namespace spacecross
