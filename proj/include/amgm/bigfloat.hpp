#pragma once

#include <mpfr.h>

#include <string>

namespace amgm {

// Value-semantic wrapper around mpfr_t.  Precision is fixed at construction;
// assignment re-targets precision to match the source.  No arithmetic lives
// here: directed-rounding operations belong to the interval layer, which
// works on raw mpfr pointers.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_double(double v, mpfr_prec_t prec);
    static BigFloat from_ui(unsigned long v, mpfr_prec_t prec);
    // Parses a decimal string, rounding to nearest at `prec`.  Throws
    // std::invalid_argument if the string is not a full valid number.
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Shortest decimal string that parses back (round-to-nearest, same
    // precision) to exactly this value.
    std::string str() const;

    // Total order on numbers; NaN compares unordered and is reported via
    // is_nan before any comparison that matters.
    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

    bool operator==(const BigFloat& b) const { return mpfr_equal_p(v_, b.v_) != 0; }
    bool operator<(const BigFloat& b) const { return mpfr_less_p(v_, b.v_) != 0; }
    bool operator<=(const BigFloat& b) const { return mpfr_lessequal_p(v_, b.v_) != 0; }
    bool operator>(const BigFloat& b) const { return mpfr_greater_p(v_, b.v_) != 0; }
    bool operator>=(const BigFloat& b) const { return mpfr_greaterequal_p(v_, b.v_) != 0; }

    // Bit-identical: same precision, same value (or both NaN).
    bool identical(const BigFloat& b) const;

  private:
    mpfr_t v_;
};

}  // namespace amgm
