#pragma once

#include "spacecross/rational.hpp"

#include <mpfr.h>

#include <optional>

namespace spacecross {

/// Interval with MPFR endpoints rounded outward. The exponent range covers
/// coordinates far beyond double (stretched grids), at a fixed mantissa width.
template <mpfr_prec_t Prec>
class WideIntervalT {
 public:
  static constexpr mpfr_prec_t kPrec = Prec;

  WideIntervalT() : WideIntervalT(0L) {}
  explicit WideIntervalT(long v) {
    init();
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
  }
  explicit WideIntervalT(const Rational& r) {
    init();
    mpfr_set_q(lo_, r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, r.get_mpq_t(), MPFR_RNDU);
  }
  WideIntervalT(const WideIntervalT& o) {
    init();
    mpfr_set(lo_, o.lo_, MPFR_RNDN);
    mpfr_set(hi_, o.hi_, MPFR_RNDN);
  }
  WideIntervalT& operator=(const WideIntervalT& o) {
    if (this != &o) {
      mpfr_set(lo_, o.lo_, MPFR_RNDN);
      mpfr_set(hi_, o.hi_, MPFR_RNDN);
    }
    return *this;
  }
  ~WideIntervalT() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  std::optional<int> sign() const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) return std::nullopt;
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return std::nullopt;
  }

  /// log2-scale size, only meaningful for comparisons.
  double magnitude() const {
    auto e = [](const mpfr_t x) { return mpfr_zero_p(x) ? -1e300 : static_cast<double>(mpfr_get_exp(x)); };
    return std::max(e(lo_), e(hi_));
  }

  friend WideIntervalT operator+(const WideIntervalT& a, const WideIntervalT& b) {
    WideIntervalT r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend WideIntervalT operator-(const WideIntervalT& a, const WideIntervalT& b) {
    WideIntervalT r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  WideIntervalT operator-() const {
    WideIntervalT r;
    mpfr_neg(r.lo_, hi_, MPFR_RNDN);
    mpfr_neg(r.hi_, lo_, MPFR_RNDN);
    return r;
  }
  friend WideIntervalT operator*(const WideIntervalT& a, const WideIntervalT& b) {
    WideIntervalT r;
    mpfr_t t;
    mpfr_init2(t, kPrec);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_}, bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
      for (auto y : bs) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDN);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDN);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  friend WideIntervalT operator/(const WideIntervalT& a, const WideIntervalT& b) {
    WideIntervalT r;
    if (!(mpfr_sgn(b.lo_) > 0 || mpfr_sgn(b.hi_) < 0)) {
      mpfr_set_nan(r.lo_);
      mpfr_set_nan(r.hi_);
      return r;
    }
    mpfr_t t;
    mpfr_init2(t, kPrec);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_}, bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : as)
      for (auto y : bs) {
        mpfr_div(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDN);
        mpfr_div(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDN);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }
  WideIntervalT& operator+=(const WideIntervalT& o) { return *this = *this + o; }
  WideIntervalT& operator-=(const WideIntervalT& o) { return *this = *this - o; }
  WideIntervalT& operator*=(const WideIntervalT& o) { return *this = *this * o; }

  friend WideIntervalT sqrt(const WideIntervalT& a) {
    WideIntervalT r;
    if (mpfr_sgn(a.lo_) > 0) mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    if (mpfr_sgn(a.hi_) > 0) mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
  }

 private:
  void init() {
    mpfr_init2(lo_, kPrec);
    mpfr_init2(hi_, kPrec);
  }
  mpfr_t lo_, hi_;
};

using WideInterval = WideIntervalT<256>;

}  // namespace spacecross
