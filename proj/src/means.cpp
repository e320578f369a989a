#include "amgm/means.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace amgm {

namespace {

void check_value(const Interval& v, std::size_t i) {
    if (!v.is_finite()) throw std::invalid_argument("sample value " + std::to_string(i) + " is not finite");
    if (v.lo().sign() < 0)
        throw std::invalid_argument("sample value " + std::to_string(i) + " is negative");
}

}  // namespace

void Sample::finish() {
    if (values_.empty()) throw std::invalid_argument("sample must contain at least one value");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        check_value(values_[i], i);
        if (values_[i].lo().is_zero() && values_[i].hi().is_zero()) ++zero_count_;
    }
    order_.resize(values_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
        return cmp(values_[a].lo(), values_[b].lo()) < 0;
    });
}

Sample Sample::from_doubles(const std::vector<double>& values, const PrecisionContext& ctx) {
    Sample s;
    s.values_.reserve(values.size());
    for (double v : values) s.values_.push_back(Interval::point(v, ctx.working_precision));
    s.finish();
    return s;
}

Sample Sample::from_strings(const std::vector<std::string>& decimals, const PrecisionContext& ctx) {
    Sample s;
    s.values_.reserve(decimals.size());
    for (const auto& d : decimals)
        s.values_.push_back(Interval::from_decimal(d, ctx.working_precision));
    s.finish();
    return s;
}

bool Sample::all_equal() const {
    for (std::size_t i = 1; i < order_.size(); ++i) {
        if (!(values_[order_[i - 1]].lo() == values_[order_[i]].lo()) ||
            !(values_[order_[i - 1]].hi() == values_[order_[i]].hi()))
            return false;
    }
    return true;
}

Interval arithmetic_mean(const Sample& s, const PrecisionContext& ctx, unsigned escalation) {
    mpfr_prec_t prec = ctx.precision_at(escalation);
    Interval sum = Interval::exact_ui(0, prec);
    for (std::size_t idx : s.canonical_order()) sum = iv_add(sum, s.value(idx), prec);
    return iv_div_ui(sum, s.size(), prec);
}

Interval geometric_mean(const Sample& s, const PrecisionContext& ctx, unsigned escalation) {
    mpfr_prec_t prec = ctx.precision_at(escalation);
    if (s.has_zero()) return Interval::exact_ui(0, prec);
    if (s.all_equal()) return s.value(0);
    Interval sum = Interval::exact_ui(0, prec);
    for (std::size_t idx : s.canonical_order()) sum = iv_add(sum, iv_ln(s.value(idx), prec), prec);
    return iv_exp(iv_div_ui(sum, s.size(), prec), prec);
}

MeanPair compute_means(const Sample& s, const PrecisionContext& ctx, unsigned escalation) {
    MeanPair mp;
    mp.arithmetic = arithmetic_mean(s, ctx, escalation);
    mp.geometric = geometric_mean(s, ctx, escalation);
    mp.has_zero = s.has_zero();
    if (mp.arithmetic.hi() < mp.geometric.lo())
        throw InternalContradictionError("certified arithmetic mean below geometric mean");
    return mp;
}

}  // namespace amgm
