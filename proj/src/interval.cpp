#include "amgm/interval.hpp"

#include <stdexcept>
#include <string>

namespace amgm {

namespace {

void require_finite(const Interval& a, const char* op) {
    if (!a.is_finite()) throw std::domain_error(std::string(op) + ": non-finite operand");
}

BigFloat binop(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t), const BigFloat& a,
               const BigFloat& b, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    f(r.raw(), a.raw(), b.raw(), rnd);
    return r;
}

BigFloat unop(int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const BigFloat& a, mpfr_prec_t prec,
              mpfr_rnd_t rnd) {
    BigFloat r(prec);
    f(r.raw(), a.raw(), rnd);
    return r;
}

}  // namespace

Interval Interval::point(double v, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_set_d(lo.raw(), v, MPFR_RNDD);
    mpfr_set_d(hi.raw(), v, MPFR_RNDU);
    return from_endpoints(std::move(lo), std::move(hi));
}

Interval Interval::point(const BigFloat& v) { return from_endpoints(v, v); }

Interval Interval::exact_ui(unsigned long v, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_set_ui(lo.raw(), v, MPFR_RNDD);
    mpfr_set_ui(hi.raw(), v, MPFR_RNDU);
    return from_endpoints(std::move(lo), std::move(hi));
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec) {
    BigFloat probe = BigFloat::from_string(s, prec);
    BigFloat lo(prec), hi(prec);
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    std::string t = s.substr(b, e - b + 1);
    mpfr_set_str(lo.raw(), t.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(hi.raw(), t.c_str(), 10, MPFR_RNDU);
    (void)probe;
    return from_endpoints(std::move(lo), std::move(hi));
}

Interval Interval::from_endpoints(BigFloat lo, BigFloat hi) {
    if (!lo.is_nan() && !hi.is_nan() && cmp(lo, hi) > 0)
        throw std::invalid_argument("interval endpoints out of order");
    Interval r;
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
}

bool Interval::contains_zero() const {
    if (lo_.is_nan() || hi_.is_nan()) return false;
    return lo_.sign() <= 0 && hi_.sign() >= 0;
}

bool Interval::contains(const BigFloat& v) const { return lo_ <= v && v <= hi_; }

bool Interval::encloses(const Interval& inner) const {
    return lo_ <= inner.lo() && inner.hi() <= hi_;
}

BigFloat Interval::width(mpfr_prec_t prec) const {
    BigFloat w(prec);
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
}

BigFloat Interval::midpoint(mpfr_prec_t prec) const {
    BigFloat m(prec);
    mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
    return m;
}

double Interval::midpoint_d() const { return midpoint(64).to_double(); }

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Interval iv_add(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    return Interval::from_endpoints(binop(mpfr_add, a.lo(), b.lo(), prec, MPFR_RNDD),
                                    binop(mpfr_add, a.hi(), b.hi(), prec, MPFR_RNDU));
}

Interval iv_sub(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    return Interval::from_endpoints(binop(mpfr_sub, a.lo(), b.hi(), prec, MPFR_RNDD),
                                    binop(mpfr_sub, a.hi(), b.lo(), prec, MPFR_RNDU));
}

Interval iv_neg(const Interval& a) {
    BigFloat lo(a.hi().precision()), hi(a.lo().precision());
    mpfr_neg(lo.raw(), a.hi().raw(), MPFR_RNDN);
    mpfr_neg(hi.raw(), a.lo().raw(), MPFR_RNDN);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

Interval iv_mul(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    require_finite(a, "iv_mul");
    require_finite(b, "iv_mul");
    BigFloat lo(prec), hi(prec), t(prec);
    mpfr_set_inf(lo.raw(), 1);
    mpfr_set_inf(hi.raw(), -1);
    const BigFloat* as[2] = {&a.lo(), &a.hi()};
    const BigFloat* bs[2] = {&b.lo(), &b.hi()};
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t.raw(), x->raw(), y->raw(), MPFR_RNDD);
            if (mpfr_less_p(t.raw(), lo.raw())) mpfr_set(lo.raw(), t.raw(), MPFR_RNDN);
            mpfr_mul(t.raw(), x->raw(), y->raw(), MPFR_RNDU);
            if (mpfr_greater_p(t.raw(), hi.raw())) mpfr_set(hi.raw(), t.raw(), MPFR_RNDN);
        }
    }
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

Interval iv_div(const Interval& a, const Interval& b, mpfr_prec_t prec) {
    require_finite(a, "iv_div");
    require_finite(b, "iv_div");
    if (b.contains_zero()) throw std::domain_error("iv_div: divisor interval contains zero");
    BigFloat lo(prec), hi(prec), t(prec);
    mpfr_set_inf(lo.raw(), 1);
    mpfr_set_inf(hi.raw(), -1);
    const BigFloat* as[2] = {&a.lo(), &a.hi()};
    const BigFloat* bs[2] = {&b.lo(), &b.hi()};
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_div(t.raw(), x->raw(), y->raw(), MPFR_RNDD);
            if (mpfr_less_p(t.raw(), lo.raw())) mpfr_set(lo.raw(), t.raw(), MPFR_RNDN);
            mpfr_div(t.raw(), x->raw(), y->raw(), MPFR_RNDU);
            if (mpfr_greater_p(t.raw(), hi.raw())) mpfr_set(hi.raw(), t.raw(), MPFR_RNDN);
        }
    }
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

Interval iv_div_ui(const Interval& a, unsigned long n, mpfr_prec_t prec) {
    require_finite(a, "iv_div_ui");
    if (n == 0) throw std::domain_error("iv_div_ui: division by zero");
    BigFloat lo(prec), hi(prec);
    mpfr_div_ui(lo.raw(), a.lo().raw(), n, MPFR_RNDD);
    mpfr_div_ui(hi.raw(), a.hi().raw(), n, MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

Interval iv_mul_2exp(const Interval& a, long e) {
    BigFloat lo(a.lo().precision()), hi(a.hi().precision());
    mpfr_mul_2si(lo.raw(), a.lo().raw(), e, MPFR_RNDD);
    mpfr_mul_2si(hi.raw(), a.hi().raw(), e, MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), std::move(hi));
}

Interval iv_sqr(const Interval& a, mpfr_prec_t prec) {
    require_finite(a, "iv_sqr");
    if (a.lo().sign() >= 0) {
        return Interval::from_endpoints(unop(mpfr_sqr, a.lo(), prec, MPFR_RNDD),
                                        unop(mpfr_sqr, a.hi(), prec, MPFR_RNDU));
    }
    if (a.hi().sign() <= 0) {
        return Interval::from_endpoints(unop(mpfr_sqr, a.hi(), prec, MPFR_RNDD),
                                        unop(mpfr_sqr, a.lo(), prec, MPFR_RNDU));
    }
    BigFloat lo(prec);
    mpfr_set_zero(lo.raw(), 1);
    BigFloat h1 = unop(mpfr_sqr, a.lo(), prec, MPFR_RNDU);
    BigFloat h2 = unop(mpfr_sqr, a.hi(), prec, MPFR_RNDU);
    return Interval::from_endpoints(std::move(lo), h1 >= h2 ? std::move(h1) : std::move(h2));
}

Interval iv_abs(const Interval& a) {
    require_finite(a, "iv_abs");
    if (a.lo().sign() >= 0) return a;
    if (a.hi().sign() <= 0) return iv_neg(a);
    BigFloat lo(a.lo().precision());
    mpfr_set_zero(lo.raw(), 1);
    BigFloat nl(a.lo().precision());
    mpfr_neg(nl.raw(), a.lo().raw(), MPFR_RNDN);
    return Interval::from_endpoints(std::move(lo), nl >= a.hi() ? std::move(nl) : a.hi());
}

Interval iv_sqrt(const Interval& a, mpfr_prec_t prec) {
    require_finite(a, "iv_sqrt");
    if (a.lo().sign() < 0)
        throw std::domain_error("iv_sqrt: interval has negative lower endpoint");
    return Interval::from_endpoints(unop(mpfr_sqrt, a.lo(), prec, MPFR_RNDD),
                                    unop(mpfr_sqrt, a.hi(), prec, MPFR_RNDU));
}

Interval iv_root_pow2(const Interval& a, unsigned k, mpfr_prec_t prec) {
    if (k == 0) return a;
    Interval r = iv_sqrt(a, prec);
    for (unsigned i = 1; i < k; ++i) r = iv_sqrt(r, prec);
    return r;
}

Interval iv_ln(const Interval& a, mpfr_prec_t prec) {
    require_finite(a, "iv_ln");
    if (a.lo().sign() <= 0)
        throw std::domain_error("iv_ln: interval has non-positive lower endpoint");
    return Interval::from_endpoints(unop(mpfr_log, a.lo(), prec, MPFR_RNDD),
                                    unop(mpfr_log, a.hi(), prec, MPFR_RNDU));
}

Interval iv_exp(const Interval& a, mpfr_prec_t prec) {
    require_finite(a, "iv_exp");
    return Interval::from_endpoints(unop(mpfr_exp, a.lo(), prec, MPFR_RNDD),
                                    unop(mpfr_exp, a.hi(), prec, MPFR_RNDU));
}

Interval iv_pow(const Interval& base, const Interval& expo, mpfr_prec_t prec) {
    require_finite(base, "iv_pow");
    require_finite(expo, "iv_pow");
    if (base.lo().sign() < 0)
        throw std::domain_error("iv_pow: base interval has negative lower endpoint");
    if (expo.lo().sign() <= 0)
        throw std::domain_error("iv_pow: exponent interval must be positive");
    if (expo.is_point()) {
        if (mpfr_cmp_ui(expo.lo().raw(), 1) == 0) return base;
        if (mpfr_cmp_ui(expo.lo().raw(), 2) == 0) return iv_sqr(base, prec);
        if (mpfr_cmp_d(expo.lo().raw(), 0.5) == 0) return iv_sqrt(base, prec);
    }
    if (base.hi().is_zero()) {
        BigFloat z(prec);
        mpfr_set_zero(z.raw(), 1);
        return Interval::from_endpoints(z, z);
    }
    if (base.lo().is_zero()) {
        Interval upper = iv_exp(iv_mul(expo, iv_ln(Interval::point(base.hi()), prec), prec), prec);
        BigFloat z(prec);
        mpfr_set_zero(z.raw(), 1);
        return Interval::from_endpoints(std::move(z), upper.hi());
    }
    return iv_exp(iv_mul(expo, iv_ln(base, prec), prec), prec);
}

}  // namespace amgm
