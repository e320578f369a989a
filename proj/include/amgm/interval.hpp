#pragma once

#include "amgm/bigfloat.hpp"

#include <string>

namespace amgm {

// Closed interval [lo, hi] over arbitrary-precision binary floats.  Every
// operation rounds the lower endpoint down and the upper endpoint up, so the
// result is guaranteed to contain the exact real value; endpoints are not
// promised to be the tightest representable ones.
//
// Overflow to an infinite endpoint is representable and flagged by
// is_finite() == false.  Addition and subtraction propagate such intervals;
// every other operation rejects non-finite operands with std::domain_error.
class Interval {
  public:
    Interval() = default;

    // [v, v] with v rounded to nearest at `prec` (exact when v fits).
    static Interval point(double v, mpfr_prec_t prec);
    static Interval point(const BigFloat& v);
    static Interval exact_ui(unsigned long v, mpfr_prec_t prec);
    // Decimal string ingested as [RNDD(s), RNDU(s)]; a point when exact.
    static Interval from_decimal(const std::string& s, mpfr_prec_t prec);
    static Interval from_endpoints(BigFloat lo, BigFloat hi);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }

    bool is_point() const { return lo_.is_finite() && lo_ == hi_; }
    bool is_finite() const { return lo_.is_finite() && hi_.is_finite(); }
    bool contains_zero() const;
    bool contains(const BigFloat& v) const;
    // True when every point of `inner` lies inside this interval.
    bool encloses(const Interval& inner) const;

    // hi - lo, rounded up at `prec`.
    BigFloat width(mpfr_prec_t prec) const;
    // (lo + hi) / 2, rounded to nearest at `prec`.
    BigFloat midpoint(mpfr_prec_t prec) const;
    double midpoint_d() const;

    bool identical(const Interval& b) const { return lo_.identical(b.lo_) && hi_.identical(b.hi_); }

    std::string str() const;

  private:
    BigFloat lo_;
    BigFloat hi_;
};

// Arithmetic.  The result is computed at precision `prec` regardless of the
// operand precisions, so a caller can re-run the same expression tree at an
// escalated precision without touching its inputs.
Interval iv_add(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval iv_sub(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval iv_neg(const Interval& a);
Interval iv_mul(const Interval& a, const Interval& b, mpfr_prec_t prec);
// Divisor interval must not contain zero.
Interval iv_div(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval iv_div_ui(const Interval& a, unsigned long n, mpfr_prec_t prec);
// Exact scaling by 2^e; endpoints keep their precision.
Interval iv_mul_2exp(const Interval& a, long e);
// Square with the sign handled, so the result's lower endpoint is never
// negative even when the operand straddles zero.
Interval iv_sqr(const Interval& a, mpfr_prec_t prec);
Interval iv_abs(const Interval& a);
// Requires lo >= 0.
Interval iv_sqrt(const Interval& a, mpfr_prec_t prec);
// k-fold iterated square root: a^(1/2^k).  k == 0 returns a unchanged.
Interval iv_root_pow2(const Interval& a, unsigned k, mpfr_prec_t prec);
// Requires lo > 0.
Interval iv_ln(const Interval& a, mpfr_prec_t prec);
Interval iv_exp(const Interval& a, mpfr_prec_t prec);
// base^expo for base >= 0 and finite positive expo, via exp(expo * ln base)
// with the zero edge of the base handled by monotonicity.  Point exponents
// 1, 2 and 0.5 take exact or single-rounding routes.
Interval iv_pow(const Interval& base, const Interval& expo, mpfr_prec_t prec);

}  // namespace amgm
