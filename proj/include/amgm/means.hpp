#pragma once

#include "amgm/interval.hpp"
#include "amgm/precision.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace amgm {

// A finite list of nonnegative point values, ingested once at a fixed
// precision.  All reductions over a sample run in a canonical order (indices
// sorted ascending by value, ties kept stable), so results are bit-identical
// under permutation of the input.
class Sample {
  public:
    static Sample from_doubles(const std::vector<double>& values, const PrecisionContext& ctx);
    static Sample from_strings(const std::vector<std::string>& decimals,
                               const PrecisionContext& ctx);

    std::size_t size() const { return values_.size(); }
    const Interval& value(std::size_t i) const { return values_[i]; }
    const std::vector<Interval>& values() const { return values_; }
    const std::vector<std::size_t>& canonical_order() const { return order_; }

    std::size_t zero_count() const { return zero_count_; }
    bool has_zero() const { return zero_count_ > 0; }
    bool all_equal() const;

  private:
    void finish();

    std::vector<Interval> values_;
    std::vector<std::size_t> order_;
    std::size_t zero_count_ = 0;
};

struct MeanPair {
    Interval arithmetic;
    Interval geometric;
    bool has_zero = false;
};

// Enclosure of (1/n) * sum(x_i), summed in canonical order.
Interval arithmetic_mean(const Sample& s, const PrecisionContext& ctx, unsigned escalation = 0);

// Enclosure of (prod x_i)^(1/n).  Any zero value gives the exact point [0,0];
// a single-element or all-equal sample gives the exact ingested value; the
// general case goes through exp(mean(ln x_i)) to avoid overflow of the raw
// product.
Interval geometric_mean(const Sample& s, const PrecisionContext& ctx, unsigned escalation = 0);

// Both means at once.  Throws InternalContradictionError if the enclosures
// certify arithmetic < geometric, which no correct rounding path can do.
MeanPair compute_means(const Sample& s, const PrecisionContext& ctx, unsigned escalation = 0);

}  // namespace amgm
