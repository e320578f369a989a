#pragma once

#include "amgm/means.hpp"

#include <vector>

namespace amgm {

// One term of the halved-exponent series: at level k the sample is reduced to
// its 2^k-th roots and the term is
//   2^(k-1) * G^(1 - 1/2^(k-1)) * (1/n) * sum_i (x_i^(1/2^k) - G^(1/2^k))^2.
// At k = 1 the power of G is zero and the factor is the exact [1,1], which
// also covers G = 0; for k >= 2 with G = 0 the term is exactly [0,0].
struct SeriesTerm {
    unsigned k = 0;
    Interval value;
};

// State after summing the first m terms.
struct DepthState {
    unsigned m = 0;
    Interval term;         // y_m
    Interval partial_sum;  // y_1 + ... + y_m
    Interval remainder;    // exact tail: 2^m * G^(1 - 1/2^m) * ((1/n) sum_i x_i^(1/2^m) - G^(1/2^m))
};

struct GapDecomposition {
    unsigned depth = 0;
    std::vector<SeriesTerm> terms;
    Interval partial_sum;
    Interval remainder;
    Interval gap;       // arithmetic - geometric
    Interval residual;  // gap - partial_sum - remainder; encloses 0 by construction
    MeanPair means;
    unsigned escalations_used = 0;
};

struct DecompositionOptions {
    // Certified width bound on the residual: width <= tol * max(1, arithmetic mean).
    double residual_rel_tol = 1e-12;
    unsigned depth_cap = 64;
};

SeriesTerm series_term(const Sample& s, const MeanPair& mp, unsigned k, const PrecisionContext& ctx,
                       unsigned escalation = 0);

// Exact tail after m terms; m = 0 gives the whole gap.
Interval remainder(const Sample& s, const MeanPair& mp, unsigned m, const PrecisionContext& ctx,
                   unsigned escalation = 0);

// Levels 1..m_max in one incremental pass.  Bit-identical to calling
// series_term / remainder level by level, since both run the same engine.
std::vector<DepthState> decompose_trace(const Sample& s, const MeanPair& mp, unsigned m_max,
                                        const PrecisionContext& ctx, unsigned escalation = 0);

// Full decomposition at fixed depth m, escalating precision until the
// residual is certified narrower than the option's relative tolerance.
// Throws InconclusiveError when escalation runs out.
GapDecomposition decompose(const Sample& s, unsigned m, const PrecisionContext& ctx,
                           const DecompositionOptions& opts = {});

// Smallest depth m <= depth_cap with remainder.hi <= tol, then a full
// decomposition at that depth.  Escalates when the remainder enclosure
// straddles tol (the width, not the value, is the blocker); throws
// DepthCapError when the remainder provably stays above tol at the cap.
GapDecomposition decompose_to_tolerance(const Sample& s, double tol, const PrecisionContext& ctx,
                                        const DecompositionOptions& opts = {});

struct ProfileRow {
    unsigned m = 0;
    Interval remainder;
    // midpoint(R_{m+1}) / midpoint(R_m); the series halves this toward 1/2.
    double ratio_to_next = 0.0;
};

struct ConvergenceProfile {
    bool degenerate = false;
    std::string status;
    std::vector<ProfileRow> rows;
};

// Remainder trajectory for m = 1..m_max.  Samples with all values equal or
// any zero have an identically-zero tail, so they get an empty profile with
// an explanatory status instead of ratios of zeros.
ConvergenceProfile convergence_profile(const Sample& s, unsigned m_max,
                                       const PrecisionContext& ctx);

}  // namespace amgm
