#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "amgm/decomposition.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace amgm;

namespace {

const PrecisionContext ctx;

bool intersects(const Interval& a, const Interval& b) {
    return a.lo() <= b.hi() && b.lo() <= a.hi();
}

}  // namespace

TEST_CASE("two-point sample matches the reference expansion") {
    Sample s = Sample::from_doubles({1.0, 4.0}, ctx);
    MeanPair mp = compute_means(s, ctx);

    oracle::Real y1_ref("0.257359312880714853594933827370905764290984374");
    oracle::Real y2_ref("0.122226566093542707410564385454330994376990207");
    oracle::Real r1_ref("0.242640687119285146405066172629094235709015626");
    oracle::Real r2_ref("0.120414121025742438994501787174763241332025419");

    SeriesTerm y1 = series_term(s, mp, 1, ctx);
    SeriesTerm y2 = series_term(s, mp, 2, ctx);
    CHECK(y1.k == 1);
    CHECK(oracle::contains(y1.value, y1_ref));
    CHECK(oracle::contains(y2.value, y2_ref));
    CHECK(y1.value.width(256).to_double() < 1e-35);

    Interval r1 = remainder(s, mp, 1, ctx);
    Interval r2 = remainder(s, mp, 2, ctx);
    CHECK(oracle::contains(r1, r1_ref));
    CHECK(oracle::contains(r2, r2_ref));

    Interval r0 = remainder(s, mp, 0, ctx);
    CHECK(oracle::contains(r0, oracle::Real(0.5)));

    double ratio = r2.midpoint_d() / r1.midpoint_d();
    CHECK(std::fabs(ratio - 0.496265166635245209) < 1e-12);
}

TEST_CASE("fixed-depth decomposition certifies the identity") {
    Sample s = Sample::from_doubles({1.0, 4.0}, ctx);
    for (unsigned m : {1u, 2u, 5u, 10u, 20u}) {
        GapDecomposition d = decompose(s, m, ctx);
        CHECK(d.depth == m);
        CHECK(d.terms.size() == m);
        CHECK(d.escalations_used == 0);
        CHECK(oracle::contains(d.gap, oracle::Real(0.5)));
        CHECK(d.residual.contains_zero());
        CHECK(d.residual.width(256).to_double() <= 1e-12);
        for (const auto& t : d.terms) CHECK(t.value.lo().sign() >= 0);
    }
    GapDecomposition d2 = decompose(s, 2, ctx);
    oracle::Real y1y2("0.379585878974257561005498212825236758667974581");
    CHECK(oracle::contains(d2.partial_sum, y1y2));
}

TEST_CASE("standalone term and tail agree bitwise with the trace") {
    Sample s = Sample::from_doubles({0.3, 11.0, 2.5, 0.07}, ctx);
    MeanPair mp = compute_means(s, ctx);
    auto trace = decompose_trace(s, mp, 6, ctx);
    for (unsigned m = 1; m <= 6; ++m) {
        CHECK(trace[m - 1].term.identical(series_term(s, mp, m, ctx).value));
        CHECK(trace[m - 1].remainder.identical(remainder(s, mp, m, ctx)));
    }
}

TEST_CASE("constant sample collapses every level to zero") {
    Sample s = Sample::from_doubles({3.0, 3.0, 3.0}, ctx);
    GapDecomposition d = decompose(s, 5, ctx);
    CHECK(d.gap.contains_zero());
    CHECK(d.gap.width(256).to_double() < 1e-36);
    for (const auto& t : d.terms) {
        CHECK(t.value.lo().sign() >= 0);
        CHECK(t.value.hi().to_double() < 1e-36);
    }
    CHECK(d.remainder.contains_zero());
    CHECK(d.remainder.width(256).to_double() < 1e-34);
    CHECK(d.residual.contains_zero());
}

TEST_CASE("single value gives an exactly centred zero gap") {
    Sample s = Sample::from_doubles({0.37}, ctx);
    GapDecomposition d = decompose(s, 3, ctx);
    CHECK(d.gap.lo().is_zero());
    CHECK(d.gap.hi().is_zero());
    CHECK(d.remainder.midpoint(256).is_zero());
    CHECK(d.residual.contains_zero());
}

TEST_CASE("zero values truncate the series to its first term") {
    Sample s = Sample::from_doubles({5.0, 0.0, 0.0}, ctx);
    MeanPair mp = compute_means(s, ctx);
    oracle::Real five_thirds = oracle::Real(5.0) / oracle::Real(3ul);

    SeriesTerm y1 = series_term(s, mp, 1, ctx);
    CHECK(oracle::contains(y1.value, five_thirds));
    for (unsigned k : {2u, 3u, 7u}) {
        SeriesTerm yk = series_term(s, mp, k, ctx);
        CHECK(yk.value.lo().is_zero());
        CHECK(yk.value.hi().is_zero());
    }
    for (unsigned m : {1u, 3u}) {
        Interval r = remainder(s, mp, m, ctx);
        CHECK(r.lo().is_zero());
        CHECK(r.hi().is_zero());
    }
    GapDecomposition d = decompose(s, 3, ctx);
    CHECK(oracle::contains(d.gap, five_thirds));
    CHECK(d.residual.contains_zero());
}

TEST_CASE("telescoping, nonnegativity and identity on random samples") {
    testutil::SampleGen gen(0x5eed2001);
    for (int i = 0; i < 300; ++i) {
        auto xs = gen.next();
        Sample s = Sample::from_doubles(xs, ctx);
        MeanPair mp = compute_means(s, ctx);
        auto trace = decompose_trace(s, mp, 12, ctx);
        Interval gap = iv_sub(mp.arithmetic, mp.geometric, ctx.working_precision);
        BigFloat scale = mp.arithmetic.hi() > BigFloat::from_ui(1, 64) ? mp.arithmetic.hi()
                                                                       : BigFloat::from_ui(1, 64);
        for (unsigned m = 1; m <= 12; ++m) {
            const auto& st = trace[m - 1];
            CHECK(st.term.lo().sign() >= 0);
            if (m > 1) {
                Interval diff = iv_sub(trace[m - 2].remainder, st.remainder, ctx.working_precision);
                CHECK(intersects(diff, st.term));
            }
            Interval residual =
                iv_sub(iv_sub(gap, st.partial_sum, ctx.working_precision), st.remainder,
                       ctx.working_precision);
            CHECK(residual.contains_zero());
            BigFloat w = residual.width(64);
            BigFloat thr(64);
            mpfr_mul_d(thr.raw(), scale.raw(), 1e-12, MPFR_RNDD);
            CHECK(w <= thr);
        }
        for (unsigned m = 2; m <= 12; ++m)
            CHECK(trace[m - 1].partial_sum.hi() >= trace[m - 2].partial_sum.lo());
    }
}

TEST_CASE("remainders validated against the direct reference iteration") {
    testutil::SampleGen gen(0x5eed2002);
    int done = 0;
    while (done < 50) {
        auto xs = gen.next_positive(2);
        bool degenerate = true;
        for (double x : xs) degenerate = degenerate && x == xs.front();
        if (degenerate) continue;
        ++done;
        Sample s = Sample::from_doubles(xs, ctx);
        MeanPair mp = compute_means(s, ctx);
        auto trace = decompose_trace(s, mp, 15, ctx);
        for (unsigned m : {1u, 5u, 10u, 15u})
            CHECK(oracle::contains(trace[m - 1].remainder, oracle::tail(xs, m)));
    }
}

TEST_CASE("remainder ratios settle into the halving band") {
    testutil::SampleGen gen(0x5eed2003);
    int done = 0;
    while (done < 100) {
        auto xs = gen.next_positive(2);
        bool degenerate = true;
        for (double x : xs) degenerate = degenerate && x == xs.front();
        if (degenerate) continue;
        ++done;
        Sample s = Sample::from_doubles(xs, ctx);
        MeanPair mp = compute_means(s, ctx);
        auto trace = decompose_trace(s, mp, 20, ctx);
        for (unsigned m = 10; m < 20; ++m) {
            double ratio = trace[m].remainder.midpoint_d() / trace[m - 1].remainder.midpoint_d();
            CHECK(ratio > 0.45);
            CHECK(ratio < 0.55);
        }
    }
}

TEST_CASE("depth search lands on the reference depths") {
    Sample s14 = Sample::from_doubles({1.0, 4.0}, ctx);
    GapDecomposition d = decompose_to_tolerance(s14, 1e-6, ctx);
    CHECK(d.depth == 19);
    CHECK(d.remainder.hi() <= BigFloat::from_double(1e-6, 64));

    Sample wide = Sample::from_doubles({1e-6, 1e6}, ctx);
    GapDecomposition dw = decompose_to_tolerance(wide, 1e-3, ctx);
    CHECK(dw.depth == 17);

    Sample flat = Sample::from_doubles({3.0, 3.0, 3.0}, ctx);
    CHECK(decompose_to_tolerance(flat, 1e-12, ctx).depth == 1);
}

TEST_CASE("depth cap and inconclusive outcomes are reported as such") {
    Sample s = Sample::from_doubles({1.0, 4.0}, ctx);
    CHECK_THROWS_AS(decompose_to_tolerance(s, 1e-60, ctx), DepthCapError);
    DecompositionOptions opts;
    opts.depth_cap = 10;
    CHECK_THROWS_AS(decompose_to_tolerance(s, 1e-30, ctx, opts), DepthCapError);

    PrecisionContext low(53, 0, 2);
    CHECK_THROWS_AS(decompose_to_tolerance(s, 1e-14, low), InconclusiveError);
    CHECK_THROWS_AS(decompose_to_tolerance(s, 0.0, ctx), std::invalid_argument);
}

TEST_CASE("escalation narrows an initially hopeless residual") {
    PrecisionContext low(53, 2, 2);
    Sample s = Sample::from_doubles({0.3, 11.0, 2.5}, ctx);
    DecompositionOptions opts;
    opts.residual_rel_tol = 1e-25;
    GapDecomposition d = decompose(s, 4, low, opts);
    CHECK(d.escalations_used > 0);
    CHECK(d.residual.contains_zero());

    PrecisionContext hopeless(53, 0, 2);
    CHECK_THROWS_AS(decompose(s, 4, hopeless, opts), InconclusiveError);
}

TEST_CASE("decomposition is deterministic") {
    Sample s = Sample::from_doubles({0.25, 9.5, 3.0, 3.0, 1e-5}, ctx);
    GapDecomposition a = decompose(s, 8, ctx);
    GapDecomposition b = decompose(s, 8, ctx);
    CHECK(a.partial_sum.identical(b.partial_sum));
    CHECK(a.remainder.identical(b.remainder));
    CHECK(a.residual.identical(b.residual));
    for (unsigned i = 0; i < 8; ++i) CHECK(a.terms[i].value.identical(b.terms[i].value));
}

TEST_CASE("convergence profile reports ratios and degeneracies") {
    Sample s14 = Sample::from_doubles({1.0, 4.0}, ctx);
    ConvergenceProfile p = convergence_profile(s14, 10, ctx);
    REQUIRE_FALSE(p.degenerate);
    REQUIRE(p.rows.size() == 10);
    CHECK(std::fabs(p.rows[0].ratio_to_next - 0.496265166635245209) < 1e-9);
    for (unsigned m = 8; m <= 10; ++m)
        CHECK(std::fabs(p.rows[m - 1].ratio_to_next - 0.5) < 0.01);

    Sample s123 = Sample::from_doubles({1.0, 2.0, 3.0}, ctx);
    ConvergenceProfile q = convergence_profile(s123, 12, ctx);
    double r1 = q.rows[0].remainder.midpoint_d();
    double r12 = q.rows[11].remainder.midpoint_d();
    CHECK(r12 <= std::ldexp(r1, -11) * 1.1);
    for (std::size_t i = 1; i < q.rows.size(); ++i)
        CHECK(q.rows[i].remainder.midpoint_d() < q.rows[i - 1].remainder.midpoint_d());

    CHECK(convergence_profile(Sample::from_doubles({2.0, 2.0}, ctx), 5, ctx).degenerate);
    CHECK(convergence_profile(Sample::from_doubles({2.0, 0.0}, ctx), 5, ctx).degenerate);
    CHECK(convergence_profile(Sample::from_doubles({2.0, 2.0}, ctx), 5, ctx).rows.empty());
}
