#include "amgm/inequalities.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace amgm {

const char* to_string(InequalityId id) {
    switch (id) {
        case InequalityId::cauchy_1_1: return "CAUCHY_1_1";
        case InequalityId::strong_2_6: return "STRONG_2_6";
        case InequalityId::strong_2_7: return "STRONG_2_7";
        case InequalityId::pairwise_3_1: return "PAIRWISE_3_1";
        case InequalityId::product_3_2: return "PRODUCT_3_2";
    }
    return "?";
}

const char* to_string(VerdictStatus st) {
    switch (st) {
        case VerdictStatus::certified_strict: return "CERTIFIED_STRICT";
        case VerdictStatus::certified_equality: return "CERTIFIED_EQUALITY";
        case VerdictStatus::holds_within_tolerance: return "HOLDS_WITHIN_TOLERANCE";
        case VerdictStatus::inconclusive: return "INCONCLUSIVE";
        case VerdictStatus::violated: return "VIOLATED";
    }
    return "?";
}

const char* to_string(EqualityCase ec) {
    switch (ec) {
        case EqualityCase::n_equals_2: return "N_EQUALS_2";
        case EqualityCase::all_equal: return "ALL_EQUAL";
        case EqualityCase::all_but_one_zero: return "ALL_BUT_ONE_ZERO";
        case EqualityCase::some_zero: return "SOME_ZERO";
        case EqualityCase::none: return "NONE";
    }
    return "?";
}

EqualityCase classify_equality(const Sample& s, InequalityId id) {
    const bool all_eq = s.all_equal();
    const bool but_one = s.size() >= 2 && s.zero_count() == s.size() - 1;
    switch (id) {
        case InequalityId::cauchy_1_1:
            return all_eq ? EqualityCase::all_equal : EqualityCase::none;
        case InequalityId::strong_2_6:
        case InequalityId::strong_2_7:
            if (all_eq) return EqualityCase::all_equal;
            if (but_one) return EqualityCase::all_but_one_zero;
            if (s.has_zero()) return EqualityCase::some_zero;
            return EqualityCase::none;
        case InequalityId::pairwise_3_1:
        case InequalityId::product_3_2:
            if (s.size() == 2) return EqualityCase::n_equals_2;
            if (all_eq) return EqualityCase::all_equal;
            if (but_one) return EqualityCase::all_but_one_zero;
            return EqualityCase::none;
    }
    return EqualityCase::none;
}

namespace {

using SidesFn = std::function<std::pair<Interval, Interval>(unsigned)>;

double tightness_of(const InequalityVerdict& v) {
    if (v.status == VerdictStatus::certified_equality) return 1.0;
    double ml = v.lhs.midpoint_d();
    double mr = v.rhs.midpoint_d();
    if (ml == 0.0 && mr == 0.0) return 1.0;
    return mr / ml;
}

InequalityVerdict resolve(InequalityId id, const Sample& s, const PrecisionContext& ctx,
                          const SidesFn& sides) {
    InequalityVerdict v;
    v.id = id;
    v.equality_case = classify_equality(s, id);
    const bool predicted = v.equality_case != EqualityCase::none;
    for (unsigned esc = 0;; ++esc) {
        auto [lhs, rhs] = sides(esc);
        v.lhs = lhs;
        v.rhs = rhs;
        v.escalations_used = esc;
        if (!lhs.is_finite() || !rhs.is_finite()) {
            if (esc < ctx.max_escalations) continue;
            v.status = VerdictStatus::inconclusive;
            break;
        }
        const bool strict = rhs.hi() < lhs.lo();
        const bool reversed = lhs.hi() < rhs.lo();
        if (predicted) {
            if (strict || reversed)
                throw InternalContradictionError(
                    std::string("certified separation on a proven equality case of ") +
                    to_string(id));
            v.status = VerdictStatus::certified_equality;
            break;
        }
        if (strict) {
            v.status = VerdictStatus::certified_strict;
            break;
        }
        if (reversed) {
            v.status = VerdictStatus::violated;
            break;
        }
        if (lhs.is_point() && rhs.is_point() && lhs.lo() == rhs.lo()) {
            v.status = VerdictStatus::certified_equality;
            break;
        }
        if (esc >= ctx.max_escalations) {
            v.status = VerdictStatus::holds_within_tolerance;
            break;
        }
    }
    v.tightness = tightness_of(v);
    return v;
}

Interval gap_of(const MeanPair& mp, mpfr_prec_t prec) {
    return iv_sub(mp.arithmetic, mp.geometric, prec);
}

}  // namespace

InequalityVerdict check_cauchy(const Sample& s, const PrecisionContext& ctx) {
    return resolve(InequalityId::cauchy_1_1, s, ctx, [&](unsigned esc) {
        MeanPair mp = compute_means(s, ctx, esc);
        return std::make_pair(mp.arithmetic, mp.geometric);
    });
}

InequalityVerdict check_strong_v1(const Sample& s, const PrecisionContext& ctx) {
    return resolve(InequalityId::strong_2_6, s, ctx, [&](unsigned esc) {
        MeanPair mp = compute_means(s, ctx, esc);
        Interval rhs = series_term(s, mp, 1, ctx, esc).value;
        return std::make_pair(gap_of(mp, ctx.precision_at(esc)), rhs);
    });
}

InequalityVerdict check_strong_v2(const Sample& s, const PrecisionContext& ctx) {
    return resolve(InequalityId::strong_2_7, s, ctx, [&](unsigned esc) {
        MeanPair mp = compute_means(s, ctx, esc);
        auto trace = decompose_trace(s, mp, 2, ctx, esc);
        return std::make_pair(gap_of(mp, ctx.precision_at(esc)), trace[1].partial_sum);
    });
}

InequalityVerdict check_pairwise(const Sample& s, const PrecisionContext& ctx) {
    if (s.size() < 2)
        throw std::invalid_argument("pairwise comparison needs at least two values");
    return resolve(InequalityId::pairwise_3_1, s, ctx, [&](unsigned esc) {
        mpfr_prec_t prec = ctx.precision_at(esc);
        MeanPair mp = compute_means(s, ctx, esc);
        std::vector<Interval> roots;
        roots.reserve(s.size());
        for (std::size_t idx : s.canonical_order()) roots.push_back(iv_sqrt(s.value(idx), prec));
        Interval sum = Interval::exact_ui(0, prec);
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                sum = iv_add(sum, iv_sqr(iv_sub(roots[i], roots[j], prec), prec), prec);
        unsigned long n = s.size();
        Interval rhs = iv_div_ui(sum, n * (n - 1), prec);
        return std::make_pair(gap_of(mp, prec), rhs);
    });
}

InequalityVerdict check_product_form(const Sample& s, const PrecisionContext& ctx) {
    if (s.size() < 2)
        throw std::invalid_argument("product form needs at least two values");
    return resolve(InequalityId::product_3_2, s, ctx, [&](unsigned esc) {
        mpfr_prec_t prec = ctx.precision_at(esc);
        Interval g = geometric_mean(s, ctx, esc);
        const auto& ord = s.canonical_order();
        Interval lhs = Interval::exact_ui(0, prec);
        for (std::size_t i = 0; i < ord.size(); ++i)
            for (std::size_t j = i + 1; j < ord.size(); ++j)
                lhs = iv_add(lhs, iv_sqrt(iv_mul(s.value(ord[i]), s.value(ord[j]), prec), prec),
                             prec);
        unsigned long n = s.size();
        Interval rhs = iv_mul(Interval::exact_ui(n * (n - 1) / 2, prec), g, prec);
        return std::make_pair(lhs, rhs);
    });
}

std::vector<InequalityVerdict> check_all(const Sample& s, const PrecisionContext& ctx) {
    std::vector<InequalityVerdict> out;
    out.reserve(s.size() >= 2 ? 5 : 3);
    out.push_back(check_cauchy(s, ctx));
    out.push_back(check_strong_v1(s, ctx));
    out.push_back(check_strong_v2(s, ctx));
    if (s.size() >= 2) {
        out.push_back(check_pairwise(s, ctx));
        out.push_back(check_product_form(s, ctx));
    }
    return out;
}

}  // namespace amgm
