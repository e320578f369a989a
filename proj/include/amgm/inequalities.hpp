#pragma once

#include "amgm/decomposition.hpp"

#include <vector>

namespace amgm {

// Wire identifiers are part of the report schema and never change.
enum class InequalityId {
    cauchy_1_1,   // arithmetic mean >= geometric mean
    strong_2_6,   // gap >= (1/n) sum (sqrt(x_i) - sqrt(G))^2
    strong_2_7,   // gap >= first two series terms
    pairwise_3_1, // gap >= (1/(n(n-1))) sum_{i<j} (sqrt(x_i) - sqrt(x_j))^2
    product_3_2,  // sum_{i<j} sqrt(x_i x_j) >= (n(n-1)/2) G
};

enum class VerdictStatus {
    certified_strict,        // rhs.hi < lhs.lo
    certified_equality,      // proven equality case, or identical point enclosures
    holds_within_tolerance,  // enclosures overlap after full escalation
    inconclusive,            // a side failed to evaluate to a finite enclosure
    violated,                // lhs.hi < rhs.lo; impossible for correct inputs
};

enum class EqualityCase { n_equals_2, all_equal, all_but_one_zero, some_zero, none };

const char* to_string(InequalityId id);
const char* to_string(VerdictStatus st);
const char* to_string(EqualityCase ec);

struct InequalityVerdict {
    InequalityId id{};
    Interval lhs;
    Interval rhs;
    VerdictStatus status{};
    EqualityCase equality_case{};
    // Midpoint ratio rhs/lhs; exactly 1 for certified equalities and 0/0.
    double tightness = 0.0;
    unsigned escalations_used = 0;
};

// Structural predicate for provable equality, checked on the ingested
// representations with exact comparisons.  First match in the order
// n_equals_2, all_equal, all_but_one_zero, some_zero wins; cases that do not
// force equality in the given inequality are skipped.
EqualityCase classify_equality(const Sample& s, InequalityId id);

InequalityVerdict check_cauchy(const Sample& s, const PrecisionContext& ctx);
InequalityVerdict check_strong_v1(const Sample& s, const PrecisionContext& ctx);
InequalityVerdict check_strong_v2(const Sample& s, const PrecisionContext& ctx);
// The pairwise and product forms need at least two values.
InequalityVerdict check_pairwise(const Sample& s, const PrecisionContext& ctx);
InequalityVerdict check_product_form(const Sample& s, const PrecisionContext& ctx);

// All checks applicable to the sample size, in declaration order.
std::vector<InequalityVerdict> check_all(const Sample& s, const PrecisionContext& ctx);

}  // namespace amgm
