#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "zetakit/polylog.hpp"
#include "zetakit/zeta.hpp"

using namespace zetakit;
using zetakit::test::ref;

TEST_CASE("direct polylogarithm") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    Real half = Real(1) / 2, pi = constants::pi(), l2 = constants::log2();
    CHECK_REL(li_direct(Real(2), half, ctx).value, ref("0.58224052646501250590265632015968010874419847480613"), 1e-35);
    CHECK_REL(li_direct(Real(2), half, ctx).value, pi * pi / 12 - l2 * l2 / 2, 1e-35);
    CHECK_REL(li_direct(Real(3), Real("-0.7"), ctx).value, ref("-0.6486663212852354935066944170240793109732"),
              1e-35);
    CHECK_REL(li_direct(Real("2.5"), Real("0.3"), ctx).value, ref("0.3179489694783296339521410488246021865958"),
              1e-35);
    CHECK_REL(li_direct(Real(1), half, ctx).value, l2, 1e-35);
    CHECK_REL(li_direct(Real(0), half, ctx).value, Real(1), 1e-35);
    CHECK_REL(li_direct(Real(3), Real(1), ctx).value, zeta_int(3), 1e-35);
    CHECK_REL(li_direct(Real(3), Real(-1), ctx).value, -zeta_alt_int(3), 1e-35);
}

TEST_CASE("binomial form of the polylogarithm") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    for (const char* s : {"2", "3", "1.5"})
        for (const char* x : {"-1", "-0.4", "0.25", "0.9"})
            CHECK_REL(li_binomial(Real(s), Real(x), ctx).value, li_direct(Real(s), Real(x), ctx).value, 1e-32);
    // x = 1: algebraic convergence, so only a loose check
    CHECK_REL(li_binomial(Real(2), Real(1), ctx).value, zeta_int(2), 1e-12);
}

TEST_CASE("binomial transform equals a rescaled polylogarithm") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    for (const char* t : {"0.1", "0.3", "0.45"}) {
        Real tv(t), x("0.8"), s(2);
        Real expected = li_direct(s, x * tv / (1 - tv), ctx).value / (1 - tv);
        CHECK_REL(binomial_transform(s, tv, x, ctx).value, expected, 1e-32);
    }
}

TEST_CASE("lerch transcendent") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    Real third = Real(1) / 3;
    CHECK_REL(lerch_phi(Real("0.5"), Real(2), third, ctx).value, ref("9.3434746593759395185555496580352932655194073216458"),
              1e-34);
    CHECK_REL(lerch_phi(Real("-0.3"), Real(3), Real("1.5"), ctx).value,
              ref("0.2789403966883556025255521101686764350116"), 1e-34);
    CHECK_REL(lerch_phi(Real(1), Real(2), Real(2), ctx).value, ref("0.6449340668482264364724151666460251892189499012068"),
              1e-34);
    // z Phi(z, s, 1) = Li_s(z)
    Real z("0.6");
    CHECK_REL(z * lerch_phi(z, Real(3), Real(1), ctx).value, li_direct(Real(3), z, ctx).value, 1e-35);
    // Phi(z, s, u) = z Phi(z, s, u + 1) + u^-s
    Real u("0.4"), s("2.5");
    CHECK_REL(lerch_phi(z, s, u, ctx).value, z * lerch_phi(z, s, u + 1, ctx).value + pow(u, -s), 1e-34);
    for (const char* zz : {"-0.5", "0.3", "0.7"})
        CHECK_REL(lerch_phi_binomial(Real(zz), Real(2), Real("1.5"), ctx).value,
                  lerch_phi(Real(zz), Real(2), Real("1.5"), ctx).value, 1e-30);
}

TEST_CASE("lerch binomial transform") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    Real s(2), t("0.3"), x("0.5"), y("0.25");
    Real w = x * t / (1 - t);
    Real expected = x * t / ((1 - t) * (1 - t)) * lerch_phi(w, s, y + 1, ctx).value;
    CHECK_REL(lerch_binomial_transform(s, t, x, y, ctx).value, expected, 1e-32);
}

TEST_CASE("closed-form polylogarithm on the whole real line") {
    PrecisionScope scope(40);
    CHECK_REL(polylog(2, Real(3)), ref("2.3201804233130983964061944737031046578266047135093"), 1e-35);
    CHECK_REL(polylog(3, Real(-5)), ref("-3.5375114376186075356768149136706041793256630503625"), 1e-35);
    CHECK_REL(polylog(4, Real(2)), ref("2.4278628067547031283121874952904580986512378875607"), 1e-35);
    CHECK_REL(polylog(1, Real("0.5")), constants::log2(), 1e-35);
    PrecisionContext ctx(40);
    for (int n = 1; n <= 5; ++n)
        for (const char* x : {"-0.9", "-0.2", "0.35", "0.8"})
            CHECK_REL(polylog(n, Real(x)), li_direct(Real(n), Real(x), ctx).value, 1e-34);
}

TEST_CASE("dilogarithm functional equations") {
    PrecisionScope scope(40);
    Real pi = constants::pi();
    for (const char* xs : {"0.1", "0.3", "0.7"}) {
        Real x(xs);
        // reflection
        CHECK_REL(polylog(2, x) + polylog(2, 1 - x), pi * pi / 6 - log(x) * log(1 - x), 1e-35);
        // Landen
        CHECK_REL(polylog(2, x) + polylog(2, -x / (1 - x)), -log(1 - x) * log(1 - x) / 2, 1e-34);
        // duplication
        CHECK_REL(polylog(2, x) + polylog(2, -x), polylog(2, x * x) / 2, 1e-34);
    }
}
