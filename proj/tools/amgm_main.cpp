#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "amgm/batch.hpp"
#include "amgm/io.hpp"
#include "amgm/report.hpp"
#include "randgen.hpp"

using namespace amgm;
using report::json;

namespace {

struct Options {
    std::string inline_values;
    std::string input_path;
    unsigned random_count = 0;
    double tol = 1e-12;
    long precision_bits = 128;
    std::string format = "json";
    unsigned depth_cap = 64;
    std::string grid = "1e-4:1e-2:10";
    std::string variant = "deviation";
    std::optional<double> alpha;
    std::uint64_t seed = 0;
    unsigned n = 3;
    bool serial = false;

    Exec exec() const { return serial ? Exec::serial : Exec::openmp; }
    FamilyVariant family_variant() const {
        return variant == "pairwise" ? FamilyVariant::pairwise : FamilyVariant::deviation;
    }
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> g.eps_lo >> c1 >> g.eps_hi >> c2 >> g.points_per_decade) || c1 != ':' ||
        c2 != ':' || !(in >> std::ws).eof())
        throw std::invalid_argument("grid must look like lo:hi:points-per-decade, e.g. 1e-4:1e-2:10");
    return g;
}

json config_json(const Options& o, const char* command) {
    json input;
    if (!o.inline_values.empty())
        input = json{{"inline", o.inline_values}};
    else if (!o.input_path.empty())
        input = json{{"path", o.input_path}};
    else if (o.random_count > 0)
        input = json{{"random", o.random_count}};
    else
        input = nullptr;
    return json{{"command", command},
                {"input", std::move(input)},
                {"n", o.n},
                {"tolerance", o.tol},
                {"precision_bits", o.precision_bits},
                {"format", o.format},
                {"depth_cap", o.depth_cap},
                {"grid", o.grid},
                {"variant", o.variant},
                {"alpha", o.alpha ? json(*o.alpha) : json(nullptr)},
                {"seed", o.seed},
                {"execution", o.serial ? "serial" : "openmp"},
                {"input_note",
                 "decimal inputs are bracketed to one ulp at the working precision; verdicts "
                 "certify the values as represented at ingestion"}};
}

std::vector<Sample> gather_samples(const Options& o, const PrecisionContext& ctx) {
    int sources = (!o.inline_values.empty() ? 1 : 0) + (!o.input_path.empty() ? 1 : 0) +
                  (o.random_count > 0 ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "provide exactly one input source: inline values, --input, or --random");
    std::vector<Sample> out;
    if (!o.inline_values.empty()) {
        out.push_back(Sample::from_strings(io::parse_inline_values(o.inline_values), ctx));
    } else if (!o.input_path.empty()) {
        for (const auto& tokens : io::read_samples(o.input_path))
            out.push_back(Sample::from_strings(tokens, ctx));
    } else {
        randgen::Gen g(o.seed);
        out.reserve(o.random_count);
        for (unsigned i = 0; i < o.random_count; ++i)
            out.push_back(Sample::from_doubles(g.next(), ctx));
    }
    return out;
}

void emit(std::ostream& out, json config, json results, json summary, int code) {
    json rep{{"config", std::move(config)},
             {"results", std::move(results)},
             {"summary", std::move(summary)},
             {"exit_status", code}};
    out << rep.dump(2) << '\n';
}

int cmd_decompose(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
    auto samples = gather_samples(o, ctx);
    DecompositionOptions opts;
    opts.depth_cap = o.depth_cap;
    std::vector<GapDecomposition> results(samples.size());
    for_each_index(samples.size(), o.exec(), [&](std::size_t i) {
        results[i] = decompose_to_tolerance(samples[i], o.tol, ctx, opts);
    });

    if (o.format == "csv") {
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (i) out << '\n';
            out << "# sample " << i << '\n' << report::decomposition_csv(results[i]);
        }
        return 0;
    }

    json res = json::array();
    unsigned max_depth = 0, max_esc = 0;
    std::optional<BigFloat> max_width;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        json entry = report::sample_json(samples[i]);
        entry["decomposition"] = report::decomposition_json(results[i]);
        res.push_back(std::move(entry));
        max_depth = std::max(max_depth, results[i].depth);
        max_esc = std::max(max_esc, results[i].escalations_used);
        BigFloat w = results[i].residual.width(ctx.working_precision);
        if (!max_width || *max_width < w) max_width = std::move(w);
    }
    json summary{{"samples", samples.size()},
                 {"max_depth", max_depth},
                 {"max_escalations", max_esc},
                 {"max_residual_width", max_width ? json(max_width->str()) : json(nullptr)}};
    emit(out, config_json(o, "decompose"), std::move(res), std::move(summary), 0);
    return 0;
}

int cmd_check(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
    auto samples = gather_samples(o, ctx);
    auto verdicts = check_many(samples, ctx, o.exec());

    unsigned violated = 0, inconclusive = 0, strict = 0, equality = 0, tolerance = 0;
    for (const auto& vs : verdicts)
        for (const auto& v : vs) {
            switch (v.status) {
                case VerdictStatus::violated: ++violated; break;
                case VerdictStatus::inconclusive: ++inconclusive; break;
                case VerdictStatus::certified_strict: ++strict; break;
                case VerdictStatus::certified_equality: ++equality; break;
                case VerdictStatus::holds_within_tolerance: ++tolerance; break;
            }
        }
    int code = violated ? 4 : inconclusive ? 2 : 0;

    if (o.format == "csv") {
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            if (i) out << '\n';
            out << "# sample " << i << '\n' << report::verdicts_csv(verdicts[i]);
        }
        return code;
    }

    json res = json::array();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        json entry = report::sample_json(samples[i]);
        json vs = json::array();
        for (const auto& v : verdicts[i]) vs.push_back(report::verdict_json(v));
        entry["verdicts"] = std::move(vs);
        res.push_back(std::move(entry));
    }
    json summary{{"samples", samples.size()},
                 {"certified_strict", strict},
                 {"certified_equality", equality},
                 {"holds_within_tolerance", tolerance},
                 {"inconclusive", inconclusive},
                 {"violated", violated}};
    emit(out, config_json(o, "check"), std::move(res), std::move(summary), code);
    return code;
}

int cmd_profile(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
    auto samples = gather_samples(o, ctx);
    std::vector<ConvergenceProfile> profiles(samples.size());
    for_each_index(samples.size(), o.exec(), [&](std::size_t i) {
        profiles[i] = convergence_profile(samples[i], o.depth_cap, ctx);
    });

    if (o.format == "csv") {
        for (std::size_t i = 0; i < profiles.size(); ++i) {
            if (i) out << '\n';
            out << "# sample " << i << ": " << profiles[i].status << '\n'
                << report::profile_csv(profiles[i]);
        }
        return 0;
    }

    json res = json::array();
    unsigned degenerate = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        json entry = report::sample_json(samples[i]);
        entry["profile"] = report::profile_json(profiles[i]);
        res.push_back(std::move(entry));
        if (profiles[i].degenerate) ++degenerate;
    }
    json summary{{"samples", samples.size()}, {"degenerate", degenerate}};
    emit(out, config_json(o, "profile"), std::move(res), std::move(summary), 0);
    return 0;
}

int cmd_sweep(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
    FamilyHypothesis h;
    h.alpha = o.alpha.value_or(2.0);
    h.variant = o.family_variant();
    SweepResult r = sweep(o.n, parse_grid(o.grid), h, ctx, o.exec());

    if (o.format == "csv") {
        out << report::sweep_csv(r);
        return 0;
    }
    json summary{{"fitted_exponent", r.fitted_exponent},
                 {"fitted_coefficient", r.fitted_coefficient},
                 {"fit_max_residual", r.fit_max_residual},
                 {"reference_coefficient", r.reference_coefficient}};
    emit(out, config_json(o, "sweep"), json::array({report::sweep_json(r)}), std::move(summary),
         0);
    return 0;
}

int cmd_witness(const Options& o, const PrecisionContext& ctx, std::ostream& out) {
    ConstantWitness w = constant_witness(o.n, o.family_variant(), ctx);
    std::optional<FalsificationResult> fals;
    if (o.alpha) fals = falsify_alpha(o.n, *o.alpha, o.family_variant(), parse_grid(o.grid), ctx);

    if (o.format == "csv") {
        out << "n,variant,gap_lo,gap_hi,raw_sum_lo,raw_sum_hi,implied_constant_lo,implied_constant_hi\n"
            << w.n << ',' << to_string(w.variant) << ',' << w.gap.lo().str() << ','
            << w.gap.hi().str() << ',' << w.raw_sum.lo().str() << ',' << w.raw_sum.hi().str()
            << ',' << w.implied_constant.lo().str() << ',' << w.implied_constant.hi().str()
            << '\n';
        if (fals) {
            out << "\n# falsification at alpha " << *o.alpha << '\n'
                << "witness_found,epsilon,lhs_lo,lhs_hi,rhs_lo,rhs_hi,points_checked,unresolved\n";
            if (fals->witness)
                out << "true," << json(fals->witness->epsilon).dump() << ','
                    << fals->witness->lhs.lo().str() << ',' << fals->witness->lhs.hi().str() << ','
                    << fals->witness->rhs.lo().str() << ',' << fals->witness->rhs.hi().str() << ','
                    << fals->points_checked << ',' << fals->unresolved << '\n';
            else
                out << "false,,,,,," << fals->points_checked << ',' << fals->unresolved << '\n';
        }
        return 0;
    }

    json entry{{"constant_witness", report::constant_witness_json(w)}};
    if (fals) entry["falsification"] = report::falsification_json(*fals);
    json summary{{"n", o.n},
                 {"implied_constant", report::interval_json(w.implied_constant)},
                 {"falsification_witness_found",
                  fals ? json(static_cast<bool>(fals->witness)) : json(nullptr)}};
    emit(out, config_json(o, "witness"), json::array({std::move(entry)}), std::move(summary), 0);
    return 0;
}

void add_common(CLI::App* sub, Options& o, bool takes_samples) {
    sub->add_option("--tol", o.tol, "target bound on the certified remainder")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--precision", o.precision_bits, "working precision in bits (at least 53)")
        ->envname("AMGM_PRECISION_BITS")
        ->capture_default_str();
    sub->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--depth-cap", o.depth_cap, "maximum series depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--grid", o.grid, "epsilon grid as lo:hi:points-per-decade")
        ->capture_default_str();
    sub->add_option("--variant", o.variant, "bound family shape")
        ->check(CLI::IsMember({"deviation", "pairwise"}))
        ->capture_default_str();
    sub->add_option("--alpha", o.alpha,
                    "family exponent (sweep hypothesis; witness runs falsification when set)");
    sub->add_option("--seed", o.seed, "seed for --random sample generation")
        ->capture_default_str();
    sub->add_flag("--serial", o.serial, "process batch samples serially");
    if (takes_samples) {
        sub->add_option("values", o.inline_values, "inline sample, e.g. \"[1,4]\"");
        sub->add_option("--input", o.input_path,
                        "sample file: text lines, json array-of-arrays, or a json report");
        sub->add_option("--random", o.random_count, "generate this many random samples");
    } else {
        sub->add_option("--n", o.n, "sample size")
            ->check(CLI::Range(2u, 1000000u))
            ->capture_default_str();
    }
}

}

int main(int argc, char** argv) {
    CLI::App app{"certified decomposition and verification of the mean gap: exact series terms, "
                 "strengthened inequality verdicts, and optimality experiments with rigorous "
                 "interval enclosures"};
    app.require_subcommand(1);
    Options o;

    CLI::App* dec = app.add_subcommand("decompose", "series decomposition of the gap to a tolerance");
    CLI::App* chk = app.add_subcommand("check", "verdicts for the strengthened inequalities");
    CLI::App* pro = app.add_subcommand("profile", "remainder trajectory and halving ratios");
    CLI::App* swp = app.add_subcommand("sweep", "gap against a family bound across an epsilon grid");
    CLI::App* wit = app.add_subcommand("witness", "extremal constant witness and alpha falsification");
    add_common(dec, o, true);
    add_common(chk, o, true);
    add_common(pro, o, true);
    add_common(swp, o, false);
    add_common(wit, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        PrecisionContext ctx;
        ctx.working_precision = o.precision_bits;
        ctx.validate();
        if (dec->parsed()) return cmd_decompose(o, ctx, std::cout);
        if (chk->parsed()) return cmd_check(o, ctx, std::cout);
        if (pro->parsed()) return cmd_profile(o, ctx, std::cout);
        if (swp->parsed()) return cmd_sweep(o, ctx, std::cout);
        if (wit->parsed()) return cmd_witness(o, ctx, std::cout);
        return 3;
    } catch (const InternalContradictionError& e) {
        std::cerr << "internal contradiction: " << e.what() << '\n';
        return 4;
    } catch (const DepthCapError& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return 2;
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
