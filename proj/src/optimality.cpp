#include "amgm/optimality.hpp"

#include <cmath>
#include <stdexcept>

namespace amgm {

const char* to_string(FamilyVariant v) {
    switch (v) {
        case FamilyVariant::deviation: return "DEVIATION";
        case FamilyVariant::pairwise: return "PAIRWISE";
    }
    return "?";
}

std::vector<double> GridSpec::points() const {
    validate(false);
    std::vector<double> out;
    const double floor = eps_lo * (1.0 - 1e-12);
    for (unsigned j = 0;; ++j) {
        double eps = eps_hi * std::pow(10.0, -static_cast<double>(j) / points_per_decade);
        if (eps < floor) break;
        out.push_back(eps);
        if (out.size() > 100000) throw std::invalid_argument("epsilon grid too dense");
    }
    return out;
}

void GridSpec::validate(bool need_decade) const {
    if (!(eps_lo > 0.0) || !std::isfinite(eps_hi))
        throw std::invalid_argument("epsilon grid endpoints must be positive and finite");
    if (!(eps_hi > eps_lo)) throw std::invalid_argument("epsilon grid is empty");
    if (points_per_decade == 0)
        throw std::invalid_argument("points per decade must be at least 1");
    if (need_decade) {
        if (eps_hi < 10.0 * eps_lo * (1.0 - 1e-9))
            throw std::invalid_argument("epsilon grid must span at least one decade for a fit");
        if (eps_hi > 0.1)
            throw std::invalid_argument("epsilon grid must stay within the perturbative regime "
                                        "(upper endpoint at most 0.1)");
    }
}

namespace {

std::vector<double> perturbed_values(unsigned n, double eps) {
    if (n < 2) throw std::invalid_argument("perturbed sample needs n >= 2");
    if (!(eps >= 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("epsilon must be finite and nonnegative");
    std::vector<double> xs(n, 1.0);
    xs[0] = 1.0 + eps;
    return xs;
}

unsigned long reference_denominator(std::size_t n, FamilyVariant variant) {
    return variant == FamilyVariant::deviation
               ? static_cast<unsigned long>(n)
               : static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1);
}

}  // namespace

Interval gap_at_epsilon(unsigned n, double eps, const PrecisionContext& ctx, unsigned escalation) {
    Sample s = Sample::from_doubles(perturbed_values(n, eps), ctx);
    MeanPair mp = compute_means(s, ctx, escalation);
    return iv_sub(mp.arithmetic, mp.geometric, ctx.precision_at(escalation));
}

Interval family_raw_sum(const Sample& s, double alpha, FamilyVariant variant,
                        const PrecisionContext& ctx, unsigned escalation) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be finite and at least 1");
    if (variant == FamilyVariant::pairwise && s.size() < 2)
        throw std::invalid_argument("pairwise family needs at least two values");
    const mpfr_prec_t prec = ctx.precision_at(escalation);
    const bool square = alpha == 2.0;
    const Interval inv_alpha =
        square ? Interval::point(0.5, prec)
               : iv_div(Interval::exact_ui(1, prec), Interval::point(alpha, prec), prec);
    const Interval alpha_iv = Interval::point(alpha, prec);

    auto root = [&](const Interval& x) {
        return square ? iv_sqrt(x, prec) : iv_pow(x, inv_alpha, prec);
    };
    auto alpha_power = [&](const Interval& diff) {
        if (square) return iv_sqr(diff, prec);
        return iv_pow(iv_abs(diff), alpha_iv, prec);
    };

    Interval sum = Interval::exact_ui(0, prec);
    if (variant == FamilyVariant::deviation) {
        Interval g_root = root(geometric_mean(s, ctx, escalation));
        for (std::size_t idx : s.canonical_order())
            sum = iv_add(sum, alpha_power(iv_sub(root(s.value(idx)), g_root, prec)), prec);
        return sum;
    }
    std::vector<Interval> roots;
    roots.reserve(s.size());
    for (std::size_t idx : s.canonical_order()) roots.push_back(root(s.value(idx)));
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            sum = iv_add(sum, alpha_power(iv_sub(roots[i], roots[j], prec)), prec);
    return sum;
}

Interval family_bound(const Sample& s, const FamilyHypothesis& h, const PrecisionContext& ctx,
                      unsigned escalation) {
    const mpfr_prec_t prec = ctx.precision_at(escalation);
    Interval raw = family_raw_sum(s, h.alpha, h.variant, ctx, escalation);
    if (h.c) return iv_mul(Interval::point(*h.c, prec), raw, prec);
    return iv_div_ui(raw, reference_denominator(s.size(), h.variant), prec);
}

SweepResult sweep(unsigned n, const GridSpec& grid, const FamilyHypothesis& h,
                  const PrecisionContext& ctx, Exec exec) {
    grid.validate(true);
    if (n < 2) throw std::invalid_argument("sweep needs n >= 2");
    SweepResult r;
    r.n = n;
    r.hypothesis = h;
    r.reference_coefficient = (1.0 / (2.0 * n)) * (1.0 - 1.0 / n);
    std::vector<double> eps = grid.points();
    r.points.resize(eps.size());
    for_each_index(eps.size(), exec, [&](std::size_t i) {
        SweepPoint p;
        p.epsilon = eps[i];
        Sample s = Sample::from_doubles(perturbed_values(n, eps[i]), ctx);
        MeanPair mp = compute_means(s, ctx);
        p.gap = iv_sub(mp.arithmetic, mp.geometric, ctx.working_precision);
        p.bound = family_bound(s, h, ctx);
        r.points[i] = std::move(p);
    });
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : r.points) {
        if (!(p.gap.lo().sign() > 0))
            throw InconclusiveError("gap enclosure not certified positive at epsilon = " +
                                    std::to_string(p.epsilon));
        double lx = std::log(p.epsilon);
        double ly = std::log(p.gap.midpoint_d());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(r.points.size());
    r.fitted_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double intercept = (sy - r.fitted_exponent * sx) / m;
    r.fitted_coefficient = std::exp(intercept);
    for (const auto& p : r.points) {
        double resid = std::fabs(std::log(p.gap.midpoint_d()) -
                                 (r.fitted_exponent * std::log(p.epsilon) + intercept));
        r.fit_max_residual = std::max(r.fit_max_residual, resid);
    }
    return r;
}

FalsificationResult falsify_alpha(unsigned n, double alpha, FamilyVariant variant,
                                  const GridSpec& grid, const PrecisionContext& ctx) {
    grid.validate(false);
    FalsificationResult res;
    std::vector<double> eps = grid.points();
    FamilyHypothesis h;
    h.alpha = alpha;
    h.variant = variant;
    for (auto it = eps.rbegin(); it != eps.rend(); ++it) {
        ++res.points_checked;
        Sample s = Sample::from_doubles(perturbed_values(n, *it), ctx);
        bool decided = false;
        for (unsigned esc = 0; esc <= ctx.max_escalations; ++esc) {
            if (esc > res.escalations_used) res.escalations_used = esc;
            MeanPair mp = compute_means(s, ctx, esc);
            Interval lhs = iv_sub(mp.arithmetic, mp.geometric, ctx.precision_at(esc));
            Interval rhs = family_bound(s, h, ctx, esc);
            if (rhs.lo() > lhs.hi()) {
                res.witness = FalsificationWitness{*it, lhs, rhs};
                return res;
            }
            if (rhs.hi() <= lhs.lo()) {
                decided = true;
                break;
            }
        }
        if (!decided) ++res.unresolved;
    }
    return res;
}

ConstantWitness constant_witness(unsigned n, FamilyVariant variant, const PrecisionContext& ctx) {
    if (n < 2) throw std::invalid_argument("constant witness needs n >= 2");
    ConstantWitness w;
    w.n = n;
    w.variant = variant;
    w.values.assign(n, 0.0);
    w.values[0] = 1.0;
    Sample s = Sample::from_doubles(w.values, ctx);
    MeanPair mp = compute_means(s, ctx);
    w.gap = iv_sub(mp.arithmetic, mp.geometric, ctx.working_precision);
    w.raw_sum = family_raw_sum(s, 2.0, variant, ctx);
    w.implied_constant = iv_div(w.gap, w.raw_sum, ctx.working_precision);
    return w;
}

namespace {

// Enclosure of (x^(1/t) - y^(1/t))^t, valid for x > y > 0.  Fails (nullopt)
// when the inner difference cannot be certified positive at this precision.
std::optional<Interval> h_value(double x, double y, double t, mpfr_prec_t prec) {
    Interval px = Interval::point(x, prec);
    Interval py = Interval::point(y, prec);
    Interval pt = Interval::point(t, prec);
    Interval inv_t = iv_div(Interval::exact_ui(1, prec), pt, prec);
    Interval diff = iv_sub(iv_pow(px, inv_t, prec), iv_pow(py, inv_t, prec), prec);
    if (!(diff.lo().sign() > 0)) return std::nullopt;
    return iv_pow(diff, pt, prec);
}

}  // namespace

MonotonicityReport h_monotonicity(double x, double y, const std::vector<double>& t_grid,
                                  const PrecisionContext& ctx, Exec exec) {
    if (!(x > y) || !(y > 0) || !std::isfinite(x))
        throw std::invalid_argument("monotonicity check needs finite x > y > 0");
    if (t_grid.size() < 2) throw std::invalid_argument("t grid needs at least two points");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0) || !std::isfinite(t_grid[i]))
            throw std::invalid_argument("t grid values must be positive and finite");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("t grid must be strictly increasing");
    }
    MonotonicityReport rep;
    rep.t_grid = t_grid;
    rep.values.resize(t_grid.size());
    rep.step_certified.assign(t_grid.size() - 1, false);
    for (unsigned esc = 0; esc <= ctx.max_escalations; ++esc) {
        rep.escalations_used = esc;
        const mpfr_prec_t prec = ctx.precision_at(esc);
        std::vector<std::optional<Interval>> vals(t_grid.size());
        for_each_index(t_grid.size(), exec,
                       [&](std::size_t i) { vals[i] = h_value(x, y, t_grid[i], prec); });
        bool evaluated = true;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (!vals[i]) {
                evaluated = false;
                break;
            }
            rep.values[i] = *vals[i];
        }
        if (!evaluated) continue;
        rep.all_certified = true;
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
            rep.step_certified[i] = rep.values[i].lo() >= rep.values[i + 1].hi();
            rep.all_certified = rep.all_certified && rep.step_certified[i];
        }
        if (rep.all_certified) return rep;
    }
    return rep;
}

}  // namespace amgm
