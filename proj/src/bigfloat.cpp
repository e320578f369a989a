#include "amgm/bigfloat.hpp"

#include <cmath>
#include <stdexcept>

namespace amgm {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_nan(v_);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_double(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_ui(unsigned long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw std::invalid_argument("empty numeric string");
    std::string t = s.substr(b, e - b + 1);
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, t.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a valid decimal number: '" + t + "'");
    return r;
}

std::string BigFloat::str() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_prec_t p = mpfr_get_prec(v_);
    long max_digits = static_cast<long>(std::ceil(static_cast<double>(p) * 0.3010299956639812)) + 2;
    BigFloat back(p);
    std::string out;
    for (long d = 1; d <= max_digits; ++d) {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", static_cast<int>(d - 1), v_);
        out.assign(buf);
        mpfr_free_str(buf);
        if (mpfr_set_str(back.v_, out.c_str(), 10, MPFR_RNDN) == 0 && mpfr_equal_p(back.v_, v_))
            return out;
    }
    return out;
}

bool BigFloat::identical(const BigFloat& b) const {
    if (mpfr_get_prec(v_) != mpfr_get_prec(b.v_)) return false;
    if (mpfr_nan_p(v_) || mpfr_nan_p(b.v_)) return mpfr_nan_p(v_) && mpfr_nan_p(b.v_);
    return mpfr_equal_p(v_, b.v_) != 0;
}

}  // namespace amgm
