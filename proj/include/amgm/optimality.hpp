#pragma once

#include "amgm/exec.hpp"
#include "amgm/means.hpp"

#include <optional>
#include <vector>

namespace amgm {

// Shape of the candidate lower bound on the mean gap:
//   deviation:  c * sum_i |x_i^(1/alpha) - G^(1/alpha)|^alpha
//   pairwise:   c * sum_{i<j} |x_i^(1/alpha) - x_j^(1/alpha)|^alpha
enum class FamilyVariant { deviation, pairwise };

const char* to_string(FamilyVariant v);

struct FamilyHypothesis {
    double alpha = 2.0;
    // Constant in front of the sum; when absent the reference constant is
    // used: 1/n for deviation, 1/(n(n-1)) for pairwise, applied as an exact
    // integer division.
    std::optional<double> c = std::nullopt;
    FamilyVariant variant = FamilyVariant::deviation;
};

// Log-spaced grid, emitted in strictly decreasing order:
//   eps_hi * 10^(-j / points_per_decade)  for j = 0, 1, ... down to eps_lo.
struct GridSpec {
    double eps_lo = 1e-4;
    double eps_hi = 1e-2;
    unsigned points_per_decade = 10;

    std::vector<double> points() const;
    // need_decade also enforces eps_hi <= 0.1, the perturbative regime where
    // exponent fits are meaningful.
    void validate(bool need_decade) const;
};

// Gap of the one-perturbed sample (1 + eps, 1, ..., 1) of size n >= 2.
// eps = 0 degenerates to the all-ones sample and an exact zero gap.
Interval gap_at_epsilon(unsigned n, double eps, const PrecisionContext& ctx,
                        unsigned escalation = 0);

// Sum in the family bound, without any constant in front.
Interval family_raw_sum(const Sample& s, double alpha, FamilyVariant variant,
                        const PrecisionContext& ctx, unsigned escalation = 0);

// c * raw_sum under the hypothesis (reference constant when h.c is absent).
Interval family_bound(const Sample& s, const FamilyHypothesis& h, const PrecisionContext& ctx,
                      unsigned escalation = 0);

struct SweepPoint {
    double epsilon = 0.0;
    Interval gap;    // lhs
    Interval bound;  // rhs under the hypothesis
};

struct SweepResult {
    unsigned n = 0;
    FamilyHypothesis hypothesis;
    std::vector<SweepPoint> points;
    // Least-squares fit of log(gap midpoint) against log(eps).
    double fitted_exponent = 0.0;
    double fitted_coefficient = 0.0;
    double fit_max_residual = 0.0;
    // Small-eps prediction for the quadratic coefficient: (1/(2n))(1 - 1/n).
    double reference_coefficient = 0.0;
};

// Gap against hypothesis bound across the grid, plus the exponent fit.
// Certifies gap.lo > 0 at every grid point.
SweepResult sweep(unsigned n, const GridSpec& grid, const FamilyHypothesis& h,
                  const PrecisionContext& ctx, Exec exec = Exec::serial);

struct FalsificationWitness {
    double epsilon = 0.0;
    Interval lhs;
    Interval rhs;
};

struct FalsificationResult {
    // First grid point (scanning epsilon from small to large) where the
    // hypothesis bound provably exceeds the gap: rhs.lo > lhs.hi.
    std::optional<FalsificationWitness> witness;
    unsigned points_checked = 0;
    // Points that stayed undecided after escalation (expected exactly when
    // the hypothesis is an equality, e.g. alpha = 2 pairwise at n = 2).
    unsigned unresolved = 0;
    unsigned escalations_used = 0;
};

// Tries to refute gap >= reference_constant * raw_sum(alpha) on the grid.
FalsificationResult falsify_alpha(unsigned n, double alpha, FamilyVariant variant,
                                  const GridSpec& grid, const PrecisionContext& ctx);

// The extremal sample (1, 0, ..., 0) whose raw alpha = 2 sum is exactly 1
// (deviation) or n - 1 (pairwise), pinning the best possible constant.
struct ConstantWitness {
    unsigned n = 0;
    FamilyVariant variant{};
    std::vector<double> values;
    Interval gap;
    Interval raw_sum;
    Interval implied_constant;  // gap / raw_sum
};

ConstantWitness constant_witness(unsigned n, FamilyVariant variant, const PrecisionContext& ctx);

struct MonotonicityReport {
    std::vector<double> t_grid;
    std::vector<Interval> values;  // h(t) = (x^(1/t) - y^(1/t))^t per grid point
    // step_certified[i]: h(t_i) >= h(t_{i+1}) certified via h_i.lo >= h_{i+1}.hi.
    std::vector<bool> step_certified;
    bool all_certified = false;
    unsigned escalations_used = 0;
};

// Certifies that t -> (x^(1/t) - y^(1/t))^t is nonincreasing across the grid
// for x > y > 0, escalating precision for any step that fails to separate.
MonotonicityReport h_monotonicity(double x, double y, const std::vector<double>& t_grid,
                                  const PrecisionContext& ctx, Exec exec = Exec::serial);

}  // namespace amgm
