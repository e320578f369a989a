// Acceptance runner: executes the eight pinned acceptance checks against the
// library and prints one [PASS]/[FAIL] line per criterion. The exit code is
// the number of failed criteria. All tolerances are fixed here, not tunable.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "amgm/batch.hpp"
#include "amgm/optimality.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace amgm;

namespace {

const PrecisionContext ctx;

struct Criterion {
    bool pass = true;
    std::string detail;
    std::string stats;
    void fail(const std::string& why) {
        if (pass) {
            pass = false;
            detail = why;
        }
    }
};

bool intersects(const Interval& a, const Interval& b) {
    return !(a.hi() < b.lo()) && !(b.hi() < a.lo());
}

BigFloat rel_threshold(const Interval& arithmetic, double rel) {
    BigFloat scale = BigFloat::from_ui(1, 64);
    if (arithmetic.hi() > scale) scale = arithmetic.hi();
    BigFloat thr(64);
    mpfr_mul_d(thr.raw(), scale.raw(), rel, MPFR_RNDD);
    return thr;
}

struct SuiteSample {
    std::vector<double> values;
    Sample sample;
};

}

int main() {
    Criterion crit[8];

    // Suite 1, shared by criteria 1-4: 10^4 random samples, sizes 1..16,
    // values log-uniform on [1e-6, 1e6], 10% zero injection, fixed seed.
    testutil::SampleGen gen(0xA46D1);
    std::vector<SuiteSample> suite;
    suite.reserve(10000);
    for (int i = 0; i < 10000; ++i) {
        std::vector<double> v = gen.next();
        Sample s = Sample::from_doubles(v, ctx);
        suite.push_back({std::move(v), std::move(s)});
    }

    // Criteria 1-3 share one single-threaded trace pass per sample.
    {
        auto t0 = std::chrono::steady_clock::now();
        std::size_t residual_checks = 0, telescope_checks = 0, ratio_checks = 0;
        unsigned oracle_validated = 0, nondegenerate = 0;
        for (const SuiteSample& ss : suite) {
            const Sample& s = ss.sample;
            MeanPair mp = compute_means(s, ctx);
            Interval gap = iv_sub(mp.arithmetic, mp.geometric, ctx.working_precision);
            auto trace = decompose_trace(s, mp, 21, ctx);
            BigFloat thr = rel_threshold(mp.arithmetic, 1e-12);

            for (unsigned m : {1u, 2u, 5u, 10u, 20u}) {
                const DepthState& st = trace[m - 1];
                Interval residual =
                    iv_sub(iv_sub(gap, st.partial_sum, ctx.working_precision), st.remainder,
                           ctx.working_precision);
                if (!residual.contains_zero())
                    crit[0].fail("residual excludes zero at depth " + std::to_string(m));
                if (!(residual.width(64) <= thr))
                    crit[0].fail("residual width above 1e-12 * max(1, mean) at depth " +
                                 std::to_string(m));
                ++residual_checks;
            }

            for (unsigned m = 1; m <= 20; ++m) {
                Interval diff =
                    iv_sub(trace[m - 1].remainder, trace[m].remainder, ctx.working_precision);
                if (!intersects(diff, trace[m].term))
                    crit[1].fail("remainder drop disagrees with the next term at depth " +
                                 std::to_string(m));
                ++telescope_checks;
            }

            if (!s.has_zero() && !s.all_equal()) {
                ++nondegenerate;
                if (oracle_validated < 50) {
                    for (unsigned m : {1u, 10u, 20u}) {
                        double mid = trace[m - 1].remainder.midpoint_d();
                        double ora = oracle::tail(ss.values, m).d();
                        if (!(std::fabs(mid / ora - 1.0) <= 1e-9))
                            crit[2].fail("remainder midpoint disagrees with the direct oracle");
                    }
                    ++oracle_validated;
                }
                double r1 = trace[0].remainder.midpoint_d();
                double r20 = trace[19].remainder.midpoint_d();
                if (!(r20 <= 1.2 * std::ldexp(r1, -18)))
                    crit[2].fail("depth-20 remainder above 1.2 * 2^-18 * first remainder");
                for (unsigned m = 10; m <= 19; ++m) {
                    double ratio =
                        trace[m].remainder.midpoint_d() / trace[m - 1].remainder.midpoint_d();
                    if (!(ratio >= 0.45 && ratio <= 0.55))
                        crit[2].fail("halving ratio " + std::to_string(ratio) +
                                     " outside [0.45, 0.55] at depth " + std::to_string(m));
                    ++ratio_checks;
                }
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= 60.0) crit[0].fail("identity pass took " + std::to_string(secs) + " s");
        char buf[160];
        std::snprintf(buf, sizeof buf, "%zu residuals over %zu samples in %.1f s, single thread",
                      residual_checks, suite.size(), secs);
        crit[0].stats = buf;
        crit[1].stats = std::to_string(telescope_checks) + " containment checks";
        std::snprintf(buf, sizeof buf, "%zu ratios on %u nondegenerate samples, %u oracle-validated",
                      ratio_checks, nondegenerate, oracle_validated);
        crit[2].stats = buf;
    }

    // Criterion 4: no certified violation anywhere; the bound chain
    // Y1 <= Y2 <= gap is certified on every sample.
    {
        std::size_t violated = 0, inconclusive = 0, ordering_fail = 0, scanned = 0;
        auto scan = [&](const Sample& s) {
            ++scanned;
            VerdictStatus s26{}, s27{};
            for (const InequalityVerdict& v : check_all(s, ctx)) {
                if (v.status == VerdictStatus::violated) ++violated;
                if (v.status == VerdictStatus::inconclusive) ++inconclusive;
                if (v.id == InequalityId::strong_2_6) s26 = v.status;
                if (v.id == InequalityId::strong_2_7) s27 = v.status;
            }
            MeanPair mp = compute_means(s, ctx);
            auto trace = decompose_trace(s, mp, 2, ctx);
            bool y2_nonneg = trace[1].term.lo().sign() >= 0;
            auto certified = [](VerdictStatus st) {
                return st == VerdictStatus::certified_strict ||
                       st == VerdictStatus::certified_equality;
            };
            if (!y2_nonneg || !certified(s26) || !certified(s27)) ++ordering_fail;
        };
        for (const SuiteSample& ss : suite) scan(ss.sample);
        const std::vector<std::vector<double>> adversarial = {
            {0, 0, 0},
            {0},
            {7},
            {9, 0, 0},
            {0, 0, 0, 0, 3},
            {1e300, 1e-300},
            {1e300, 1e-300, 1.0},
            {1e-280, 1e-280, 1e280},
            {1, 4},
            {2, 2},
            {0, 5},
            {5, 0},
            {1e6, 1e-6},
            {0.5, 0.5, 0.5, 0.5},
            {1e300, 1},
            {1e-300, 1},
            {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384, 32768},
            {3.5, 3.5, 3.5, 0, 0, 0}};
        for (const auto& v : adversarial) scan(Sample::from_doubles(v, ctx));
        if (violated) crit[3].fail(std::to_string(violated) + " certified violations");
        if (ordering_fail)
            crit[3].fail(std::to_string(ordering_fail) + " samples without a certified bound chain");
        crit[3].stats = std::to_string(scanned) + " samples scanned, " +
                        std::to_string(inconclusive) + " inconclusive";
    }

    // Criterion 5: constructed equality classes certify equality with both
    // sides within width 1e-20 * max(1, mean).
    {
        std::mt19937_64 rng(0xACC5);
        std::size_t checked = 0;
        auto equality_ok = [&](const InequalityVerdict& v, const Interval& arithmetic) {
            ++checked;
            if (v.status != VerdictStatus::certified_equality) {
                crit[4].fail(std::string("expected equality from ") + to_string(v.id) + ", got " +
                             to_string(v.status));
                return;
            }
            Interval diff = iv_sub(v.lhs, v.rhs, ctx.working_precision);
            if (!diff.contains_zero() || !(diff.width(64) <= rel_threshold(arithmetic, 1e-20)))
                crit[4].fail(std::string("equality sides too far apart in ") + to_string(v.id));
        };
        for (int i = 0; i < 100; ++i) {
            double a = testutil::log_uniform(rng, 1e-6, 1e6);
            double b = testutil::log_uniform(rng, 1e-6, 1e6);
            Sample pair = Sample::from_doubles({a, b}, ctx);
            MeanPair mp = compute_means(pair, ctx);
            equality_ok(check_pairwise(pair, ctx), mp.arithmetic);
            equality_ok(check_product_form(pair, ctx), mp.arithmetic);
        }
        std::uniform_int_distribution<int> nd(1, 16), nd2(2, 16);
        for (int i = 0; i < 50; ++i) {
            double c = testutil::log_uniform(rng, 1e-6, 1e6);
            Sample flat = Sample::from_doubles(std::vector<double>(nd(rng), c), ctx);
            MeanPair mp = compute_means(flat, ctx);
            for (const InequalityVerdict& v : check_all(flat, ctx)) {
                equality_ok(v, mp.arithmetic);
                if (v.equality_case != EqualityCase::all_equal && flat.size() > 2)
                    crit[4].fail("all-equal sample classified differently");
            }
        }
        for (int i = 0; i < 50; ++i) {
            std::vector<double> spike(nd2(rng), 0.0);
            spike[0] = testutil::log_uniform(rng, 1e-6, 1e6);
            Sample s = Sample::from_doubles(spike, ctx);
            MeanPair mp = compute_means(s, ctx);
            for (const InequalityVerdict& v : check_all(s, ctx)) {
                if (v.id == InequalityId::cauchy_1_1) continue;
                equality_ok(v, mp.arithmetic);
                if (v.equality_case != EqualityCase::all_but_one_zero &&
                    v.equality_case != EqualityCase::n_equals_2)
                    crit[4].fail("spike sample classified differently");
            }
        }
        crit[4].stats = std::to_string(checked) + " equality verdicts";
    }

    // Criterion 6: the witness (1, 0, ..., 0) pins the constants exactly,
    // with bitwise-equal sides in the strengthened checks.
    {
        for (unsigned n = 2; n <= 16; ++n) {
            ConstantWitness wd = constant_witness(n, FamilyVariant::deviation, ctx);
            Interval one = Interval::exact_ui(1, ctx.working_precision);
            Interval ref = iv_div_ui(one, n, ctx.working_precision);
            if (!wd.gap.identical(ref))
                crit[5].fail("witness gap differs from 1/n at n = " + std::to_string(n));
            if (!wd.implied_constant.identical(ref))
                crit[5].fail("implied deviation constant differs from 1/n at n = " +
                             std::to_string(n));
            ConstantWitness wp = constant_witness(n, FamilyVariant::pairwise, ctx);
            Interval refp = iv_div_ui(ref, n - 1, ctx.working_precision);
            if (!wp.implied_constant.identical(refp))
                crit[5].fail("implied pairwise constant differs from 1/(n(n-1)) at n = " +
                             std::to_string(n));

            std::vector<double> spike(n, 0.0);
            spike[0] = 1.0;
            Sample s = Sample::from_doubles(spike, ctx);
            InequalityVerdict v1 = check_strong_v1(s, ctx);
            InequalityVerdict vp = check_pairwise(s, ctx);
            if (v1.status != VerdictStatus::certified_equality || !v1.lhs.identical(v1.rhs))
                crit[5].fail("deviation bound not bitwise tight at n = " + std::to_string(n));
            if (vp.status != VerdictStatus::certified_equality || !vp.lhs.identical(vp.rhs))
                crit[5].fail("pairwise bound not bitwise tight at n = " + std::to_string(n));
        }
        crit[5].stats = "n = 2..16, both variants, bitwise equality";
    }

    // Criterion 7: quadratic exponent and reference coefficient from the
    // sweep; falsification witnesses below alpha = 2 and none at 2.
    {
        GridSpec grid;
        unsigned witnesses = 0;
        for (unsigned n : {2u, 3u, 4u, 8u, 16u}) {
            SweepResult sr = sweep(n, grid, FamilyHypothesis{}, ctx, Exec::serial);
            if (!(std::fabs(sr.fitted_exponent - 2.0) <= 0.05))
                crit[6].fail("fitted exponent " + std::to_string(sr.fitted_exponent) +
                             " at n = " + std::to_string(n));
            if (!(std::fabs(sr.fitted_coefficient / sr.reference_coefficient - 1.0) <= 0.02))
                crit[6].fail("fitted coefficient off by more than 2% at n = " + std::to_string(n));
            for (FamilyVariant var : {FamilyVariant::deviation, FamilyVariant::pairwise}) {
                for (double alpha : {1.0, 1.5, 1.9}) {
                    FalsificationResult fr = falsify_alpha(n, alpha, var, grid, ctx);
                    if (!fr.witness)
                        crit[6].fail("no falsification witness at alpha " + std::to_string(alpha) +
                                     ", n = " + std::to_string(n));
                    else
                        ++witnesses;
                }
                FalsificationResult f2 = falsify_alpha(n, 2.0, var, grid, ctx);
                if (f2.witness) crit[6].fail("spurious witness at alpha 2, n = " + std::to_string(n));
            }
        }
        crit[6].stats = std::to_string(witnesses) + " witnesses below alpha 2, none at 2";
    }

    // Criterion 8: the root-difference power h(t) certifies nonincreasing on
    // geometric 16-point grids for 100 random pairs, with at most 2
    // escalations and no inconclusive outcome.
    {
        std::mt19937_64 rng(0xACC8);
        std::vector<double> t_grid(16);
        for (int i = 0; i < 16; ++i) t_grid[i] = 0.125 * std::pow(64.0, i / 15.0);
        unsigned max_esc = 0;
        for (int i = 0; i < 100; ++i) {
            double x = testutil::log_uniform(rng, 1e-3, 1e3);
            double y = testutil::log_uniform(rng, 1e-3, 1e3);
            if (x == y) {
                --i;
                continue;
            }
            if (x < y) std::swap(x, y);
            try {
                MonotonicityReport r = h_monotonicity(x, y, t_grid, ctx, Exec::serial);
                if (!r.all_certified) crit[7].fail("a step failed to certify");
                if (r.escalations_used > 2)
                    crit[7].fail("needed " + std::to_string(r.escalations_used) + " escalations");
                max_esc = std::max(max_esc, r.escalations_used);
            } catch (const InconclusiveError&) {
                crit[7].fail("inconclusive monotonicity result");
            }
        }
        crit[7].stats = "100 pairs, 16-point grids, max escalations " + std::to_string(max_esc);
    }

    const char* names[8] = {
        "exact identity at depths 1, 2, 5, 10, 20",
        "telescoping remainder consistency",
        "remainder halving toward one half",
        "inequality soundness and certified bound chain",
        "equality-case taxonomy",
        "extremal witness constants, bitwise",
        "exponent asymptotics and alpha falsification",
        "root-difference power monotonicity",
    };
    int failures = 0;
    for (int i = 0; i < 8; ++i) {
        if (crit[i].pass) {
            std::printf("[PASS] %d. %s (%s)\n", i + 1, names[i], crit[i].stats.c_str());
        } else {
            ++failures;
            std::printf("[FAIL] %d. %s: %s\n", i + 1, names[i], crit[i].detail.c_str());
        }
    }
    return failures;
}
