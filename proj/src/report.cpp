#include "amgm/report.hpp"

#include <sstream>

namespace amgm::report {

namespace {

std::string fmt(double d) { return json(d).dump(); }

void interval_cols(std::ostringstream& out, const Interval& iv) {
    out << iv.lo().str() << ',' << iv.hi().str();
}

}

json interval_json(const Interval& iv) {
    return json{{"lo", iv.lo().str()}, {"hi", iv.hi().str()}};
}

json sample_json(const Sample& s) {
    json values = json::array();
    for (const Interval& v : s.values()) values.push_back(interval_json(v));
    return json{{"n", s.size()}, {"values", std::move(values)}};
}

json decomposition_json(const GapDecomposition& d) {
    json terms = json::array();
    for (const SeriesTerm& t : d.terms)
        terms.push_back(json{{"k", t.k}, {"value", interval_json(t.value)}});
    return json{{"depth", d.depth},
                {"escalations_used", d.escalations_used},
                {"means", json{{"arithmetic", interval_json(d.means.arithmetic)},
                               {"geometric", interval_json(d.means.geometric)}}},
                {"gap", interval_json(d.gap)},
                {"terms", std::move(terms)},
                {"partial_sum", interval_json(d.partial_sum)},
                {"remainder", interval_json(d.remainder)},
                {"residual", interval_json(d.residual)}};
}

json verdict_json(const InequalityVerdict& v) {
    return json{{"inequality", to_string(v.id)},
                {"status", to_string(v.status)},
                {"equality_case", to_string(v.equality_case)},
                {"lhs", interval_json(v.lhs)},
                {"rhs", interval_json(v.rhs)},
                {"tightness", v.tightness},
                {"escalations_used", v.escalations_used}};
}

json profile_json(const ConvergenceProfile& p) {
    json rows = json::array();
    for (const ProfileRow& r : p.rows)
        rows.push_back(json{{"m", r.m},
                            {"remainder", interval_json(r.remainder)},
                            {"ratio_to_next", r.ratio_to_next}});
    return json{{"degenerate", p.degenerate}, {"status", p.status}, {"rows", std::move(rows)}};
}

json sweep_json(const SweepResult& r) {
    json points = json::array();
    for (const SweepPoint& p : r.points)
        points.push_back(json{{"epsilon", p.epsilon},
                              {"gap", interval_json(p.gap)},
                              {"bound", interval_json(p.bound)}});
    json hyp{{"alpha", r.hypothesis.alpha},
             {"c", r.hypothesis.c ? json(*r.hypothesis.c) : json(nullptr)},
             {"variant", to_string(r.hypothesis.variant)}};
    return json{{"n", r.n},
                {"hypothesis", std::move(hyp)},
                {"points", std::move(points)},
                {"fitted_exponent", r.fitted_exponent},
                {"fitted_coefficient", r.fitted_coefficient},
                {"fit_max_residual", r.fit_max_residual},
                {"reference_coefficient", r.reference_coefficient}};
}

json falsification_json(const FalsificationResult& r) {
    json w = nullptr;
    if (r.witness)
        w = json{{"epsilon", r.witness->epsilon},
                 {"lhs", interval_json(r.witness->lhs)},
                 {"rhs", interval_json(r.witness->rhs)}};
    return json{{"witness", std::move(w)},
                {"points_checked", r.points_checked},
                {"unresolved", r.unresolved},
                {"escalations_used", r.escalations_used}};
}

json constant_witness_json(const ConstantWitness& w) {
    return json{{"n", w.n},
                {"variant", to_string(w.variant)},
                {"values", w.values},
                {"gap", interval_json(w.gap)},
                {"raw_sum", interval_json(w.raw_sum)},
                {"implied_constant", interval_json(w.implied_constant)}};
}

json monotonicity_json(const MonotonicityReport& r) {
    json values = json::array();
    for (const Interval& v : r.values) values.push_back(interval_json(v));
    json steps = json::array();
    for (bool b : r.step_certified) steps.push_back(b);
    return json{{"t_grid", r.t_grid},
                {"values", std::move(values)},
                {"step_certified", std::move(steps)},
                {"all_certified", r.all_certified},
                {"escalations_used", r.escalations_used}};
}

std::string decomposition_csv(const GapDecomposition& d) {
    std::ostringstream out;
    out << "row,k,lo,hi\n";
    for (const SeriesTerm& t : d.terms) {
        out << "term," << t.k << ',';
        interval_cols(out, t.value);
        out << '\n';
    }
    const std::pair<const char*, const Interval*> tails[] = {
        {"partial_sum", &d.partial_sum}, {"remainder", &d.remainder},
        {"gap", &d.gap},                 {"residual", &d.residual},
        {"arithmetic", &d.means.arithmetic}, {"geometric", &d.means.geometric}};
    for (const auto& [name, iv] : tails) {
        out << name << ",,";
        interval_cols(out, *iv);
        out << '\n';
    }
    return out.str();
}

std::string verdicts_csv(const std::vector<InequalityVerdict>& vs) {
    std::ostringstream out;
    out << "inequality,status,equality_case,lhs_lo,lhs_hi,rhs_lo,rhs_hi,tightness,escalations_used\n";
    for (const InequalityVerdict& v : vs) {
        out << to_string(v.id) << ',' << to_string(v.status) << ',' << to_string(v.equality_case)
            << ',';
        interval_cols(out, v.lhs);
        out << ',';
        interval_cols(out, v.rhs);
        out << ',' << fmt(v.tightness) << ',' << v.escalations_used << '\n';
    }
    return out.str();
}

std::string profile_csv(const ConvergenceProfile& p) {
    std::ostringstream out;
    out << "m,remainder_lo,remainder_hi,ratio_to_next\n";
    for (const ProfileRow& r : p.rows) {
        out << r.m << ',';
        interval_cols(out, r.remainder);
        out << ',' << fmt(r.ratio_to_next) << '\n';
    }
    return out.str();
}

std::string sweep_csv(const SweepResult& r) {
    std::ostringstream out;
    out << "epsilon,lhs_lo,lhs_hi,rhs_lo,rhs_hi\n";
    for (const SweepPoint& p : r.points) {
        out << fmt(p.epsilon) << ',';
        interval_cols(out, p.gap);
        out << ',';
        interval_cols(out, p.bound);
        out << '\n';
    }
    return out.str();
}

}
