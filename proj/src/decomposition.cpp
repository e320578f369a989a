#include "amgm/decomposition.hpp"

#include <utility>

namespace amgm {

namespace {

// Incremental evaluator over root-halving levels.  All per-sample reductions
// iterate the canonical order so results are permutation-invariant bit for
// bit.  A single pass produces terms and remainders for every level, and the
// standalone entry points below drive the same code, so they agree exactly
// with the batched trace.
class LevelEngine {
  public:
    LevelEngine(const Sample& s, const MeanPair& mp, mpfr_prec_t prec)
        : s_(s), mp_(mp), prec_(prec), zero_g_(mp.geometric.hi().is_zero()) {
        roots_.reserve(s.size());
        for (std::size_t idx : s.canonical_order()) roots_.push_back(s.value(idx));
        g_root_ = mp.geometric;
    }

    unsigned level() const { return level_; }

    void advance() {
        g_root_prev_ = g_root_;
        g_root_ = iv_sqrt(g_root_, prec_);
        for (auto& r : roots_) r = iv_sqrt(r, prec_);
        ++level_;
    }

    Interval term() const {
        if (zero_g_ && level_ >= 2) return Interval::exact_ui(0, prec_);
        Interval sum = Interval::exact_ui(0, prec_);
        for (const auto& r : roots_) sum = iv_add(sum, iv_sqr(iv_sub(r, g_root_, prec_), prec_), prec_);
        Interval avg = iv_div_ui(sum, s_.size(), prec_);
        Interval factor = level_ == 1 ? Interval::exact_ui(1, prec_)
                                      : iv_div(mp_.geometric, g_root_prev_, prec_);
        return iv_mul_2exp(iv_mul(factor, avg, prec_), static_cast<long>(level_) - 1);
    }

    Interval tail() const {
        if (zero_g_) return Interval::exact_ui(0, prec_);
        Interval sum = Interval::exact_ui(0, prec_);
        for (const auto& r : roots_) sum = iv_add(sum, r, prec_);
        Interval diff = iv_sub(iv_div_ui(sum, s_.size(), prec_), g_root_, prec_);
        Interval factor = iv_div(mp_.geometric, g_root_, prec_);
        return iv_mul_2exp(iv_mul(factor, diff, prec_), static_cast<long>(level_));
    }

  private:
    const Sample& s_;
    const MeanPair& mp_;
    mpfr_prec_t prec_;
    bool zero_g_;
    unsigned level_ = 0;
    std::vector<Interval> roots_;
    Interval g_root_;
    Interval g_root_prev_;
};

BigFloat residual_scale(const Interval& arithmetic) {
    BigFloat one = BigFloat::from_ui(1, 64);
    return arithmetic.hi() > one ? arithmetic.hi() : one;
}

}  // namespace

SeriesTerm series_term(const Sample& s, const MeanPair& mp, unsigned k, const PrecisionContext& ctx,
                       unsigned escalation) {
    if (k == 0) throw std::invalid_argument("series term index starts at 1");
    LevelEngine eng(s, mp, ctx.precision_at(escalation));
    for (unsigned i = 0; i < k; ++i) eng.advance();
    return SeriesTerm{k, eng.term()};
}

Interval remainder(const Sample& s, const MeanPair& mp, unsigned m, const PrecisionContext& ctx,
                   unsigned escalation) {
    mpfr_prec_t prec = ctx.precision_at(escalation);
    if (m == 0) return iv_sub(mp.arithmetic, mp.geometric, prec);
    LevelEngine eng(s, mp, prec);
    for (unsigned i = 0; i < m; ++i) eng.advance();
    return eng.tail();
}

std::vector<DepthState> decompose_trace(const Sample& s, const MeanPair& mp, unsigned m_max,
                                        const PrecisionContext& ctx, unsigned escalation) {
    mpfr_prec_t prec = ctx.precision_at(escalation);
    std::vector<DepthState> out;
    out.reserve(m_max);
    LevelEngine eng(s, mp, prec);
    Interval partial = Interval::exact_ui(0, prec);
    for (unsigned m = 1; m <= m_max; ++m) {
        eng.advance();
        DepthState st;
        st.m = m;
        st.term = eng.term();
        partial = iv_add(partial, st.term, prec);
        st.partial_sum = partial;
        st.remainder = eng.tail();
        out.push_back(std::move(st));
    }
    return out;
}

namespace {

GapDecomposition assemble(const Sample& s, unsigned m, const PrecisionContext& ctx,
                          const DecompositionOptions& opts, unsigned start_esc = 0) {
    const double rel_tol = opts.residual_rel_tol;
    for (unsigned esc = start_esc; esc <= ctx.max_escalations; ++esc) {
        mpfr_prec_t prec = ctx.precision_at(esc);
        MeanPair mp = compute_means(s, ctx, esc);
        GapDecomposition d;
        d.depth = m;
        d.means = mp;
        d.gap = iv_sub(mp.arithmetic, mp.geometric, prec);
        if (m == 0) {
            d.partial_sum = Interval::exact_ui(0, prec);
            d.remainder = d.gap;
        } else {
            auto trace = decompose_trace(s, mp, m, ctx, esc);
            d.terms.reserve(m);
            for (const auto& st : trace) d.terms.push_back(SeriesTerm{st.m, st.term});
            d.partial_sum = trace.back().partial_sum;
            d.remainder = trace.back().remainder;
        }
        d.residual = iv_sub(iv_sub(d.gap, d.partial_sum, prec), d.remainder, prec);
        d.escalations_used = esc;
        if (!d.residual.contains_zero())
            throw InternalContradictionError("decomposition residual excludes zero");
        BigFloat thr(64);
        mpfr_mul_d(thr.raw(), residual_scale(mp.arithmetic).raw(), rel_tol, MPFR_RNDD);
        if (d.residual.width(64) <= thr) return d;
    }
    throw InconclusiveError("residual width exceeds " + std::to_string(rel_tol) +
                            " * max(1, mean) after precision escalation");
}

}  // namespace

GapDecomposition decompose(const Sample& s, unsigned m, const PrecisionContext& ctx,
                           const DecompositionOptions& opts) {
    return assemble(s, m, ctx, opts);
}

GapDecomposition decompose_to_tolerance(const Sample& s, double tol, const PrecisionContext& ctx,
                                        const DecompositionOptions& opts) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    BigFloat tol_bf = BigFloat::from_double(tol, 64);
    for (unsigned esc = 0; esc <= ctx.max_escalations; ++esc) {
        MeanPair mp = compute_means(s, ctx, esc);
        LevelEngine eng(s, mp, ctx.precision_at(esc));
        bool straddled = false;
        unsigned found = 0;
        for (unsigned m = 1; m <= opts.depth_cap; ++m) {
            eng.advance();
            Interval tail = eng.tail();
            if (tail.hi() <= tol_bf) {
                found = m;
                break;
            }
            straddled = tail.lo() <= tol_bf;
        }
        if (found) {
            GapDecomposition d = assemble(s, found, ctx, opts, esc);
            if (d.remainder.hi() <= tol_bf) return d;
            continue;
        }
        if (!straddled)
            throw DepthCapError("remainder provably above tolerance at depth cap", opts.depth_cap);
    }
    throw InconclusiveError("remainder enclosure straddles the tolerance at the depth cap even "
                            "after precision escalation");
}

ConvergenceProfile convergence_profile(const Sample& s, unsigned m_max,
                                       const PrecisionContext& ctx) {
    ConvergenceProfile p;
    if (s.all_equal()) {
        p.degenerate = true;
        p.status = "degenerate: all values equal, tail is identically zero";
        return p;
    }
    if (s.has_zero()) {
        p.degenerate = true;
        p.status = "degenerate: zero value present, tail is identically zero";
        return p;
    }
    if (m_max == 0) throw std::invalid_argument("profile depth must be at least 1");
    p.status = "ok";
    MeanPair mp = compute_means(s, ctx);
    auto trace = decompose_trace(s, mp, m_max + 1, ctx);
    p.rows.reserve(m_max);
    for (unsigned m = 1; m <= m_max; ++m) {
        ProfileRow row;
        row.m = m;
        row.remainder = trace[m - 1].remainder;
        double cur = trace[m - 1].remainder.midpoint_d();
        double nxt = trace[m].remainder.midpoint_d();
        row.ratio_to_next = cur != 0.0 ? nxt / cur : 0.0;
        p.rows.push_back(std::move(row));
    }
    return p;
}

}  // namespace amgm
