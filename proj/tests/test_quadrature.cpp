#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "zetakit/quadrature.hpp"
#include "zetakit/zeta.hpp"

using namespace zetakit;
using zetakit::test::ref;

TEST_CASE("tanh-sinh on smooth and endpoint-singular integrands") {
    PrecisionScope scope(30);
    PrecisionContext ctx(30);
    auto gauss = integrate(IntegralSpec::plain([](const Real& x) { return exp(-x * x); }, Real(0), Real(2)), ctx);
    CHECK(gauss.converged);
    CHECK_REL(gauss.value, ref("0.88208139076242167996748103591405403722405177086856"), 1e-25);
    auto sqrt_log = integrate(IntegralSpec::plain([](const Real& x) { return sqrt(x) * log(x); }, Real(0), Real(1)), ctx);
    CHECK_REL(sqrt_log.value, Real(-4) / 9, 1e-24);
    auto log_sin = integrate(IntegralSpec::plain([](const Real& x) { return log(sin(x)); }, Real(0), constants::pi() / 2), ctx);
    CHECK_REL(log_sin.value, -constants::pi() * constants::log2() / 2, 1e-24);
}

TEST_CASE("distance arguments keep log(1 - x) finite") {
    PrecisionScope scope(30);
    PrecisionContext ctx(30);
    // int_0^1 log(1-x) dx = -1
    IntegralSpec spec([](const Real&, const Real&, const Real& to_upper) { return log(to_upper); }, Real(0), Real(1));
    auto r = integrate(spec, ctx);
    CHECK(isfinite(r.value));
    CHECK_REL(r.value, Real(-1), 1e-24);
}

TEST_CASE("cot moments") {
    PrecisionScope scope(30);
    PrecisionContext ctx(30);
    Real pi = constants::pi(), l2 = constants::log2();
    CHECK_REL(cot_moment(1, ctx).value, pi / 2 * l2, 1e-12);
    CHECK_REL(cot_moment(1, ctx).value, ref("1.0887930451518010652503444491188069736692918501846"), 1e-12);
    CHECK_REL(cot_moment(2, ctx).value, -Real(7) / 8 * zeta_int(3) + pi * pi / 4 * l2, 1e-12);
    CHECK_REL(cot_moment(2, ctx).value, ref("0.65847232569963413648709889716600527590558175624904"), 1e-12);
    CHECK_THROWS(cot_moment(3, ctx));
}

TEST_CASE("odd zeta values from the bernoulli cot integral") {
    PrecisionScope scope(30);
    PrecisionContext ctx(30);
    CHECK_REL(zeta_odd_cot(1, ctx).value, ref("1.2020569031595942853997381615114499907649862923405"), 1e-10);
    CHECK_REL(zeta_odd_cot(2, ctx).value, ref("1.0369277551433699263313654864570341680570809195019"), 1e-10);
}

TEST_CASE("integrand near the origin matches the direct product") {
    PrecisionScope scope(40);
    Real pi = constants::pi();
    for (int n = 1; n <= 3; ++n) {
        for (const char* xs : {"0.0009", "0.0011", "0.002"}) {
            Real x(xs);
            Real direct = bernoulli_polynomial(2 * n + 1, x) * cos(pi * x) / sin(pi * x);
            CHECK_REL(bernoulli_cot_integrand(n, x), direct, 1e-30);
        }
    }
    CHECK(isfinite(bernoulli_cot_integrand(1, Real(0))));
}

TEST_CASE("basic identity partial sums") {
    PrecisionScope scope(40);
    for (int degree = 1; degree <= 3; ++degree) {
        for (Side side : {Side::Cos, Side::Sin}) {
            auto p = basic_identity_partial(60, degree, side);
            CAPTURE(degree);
            REQUIRE(p.sums.size() == 61);
            // the error shrinks as more outer terms are taken
            CHECK(abs(p.sums[60] - p.target) < abs(p.sums[10] - p.target));
        }
    }
    // geometric convergence for the two sin configurations with odd degree
    auto s1 = basic_identity_partial(60, 1, Side::Sin);
    CHECK(abs(s1.sums[60] - s1.target) < Real("1e-12"));
}
