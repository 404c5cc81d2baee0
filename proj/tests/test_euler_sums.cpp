#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "zetakit/euler_sums.hpp"
#include "zetakit/polylog.hpp"
#include "zetakit/zeta.hpp"

using namespace zetakit;
using zetakit::test::ref;

namespace {

using Mono = std::vector<std::pair<int, int>>;

Real S(Mono mono, int q, const Real& x, const PrecisionContext& ctx) {
    return weighted_sum(EulerSumSpec(std::move(mono), q, x), ctx).value;
}

}  // namespace

TEST_CASE("weighted sums against direct oracles") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    CHECK_REL(S({{1, 1}}, 2, Real(1) / 3, ctx), ref("0.38465444053548770222103653480730290124714439563275"), 1e-34);
    CHECK_REL(S({{2, 1}}, 1, Real(1) / 2, ctx), ref("0.75128556447474642837483635094465624422811643271281"), 1e-34);
    CHECK_REL(S({{1, 2}}, 2, Real(1) / 4, ctx), ref("0.29230613133930299768799752003805223713669766669114"), 1e-34);
    auto alt = weighted_sum(EulerSumSpec({{1, 1}}, 2, 1, true), ctx);
    CHECK_REL(alt.value, ref("0.75128556447474642837483635094465624422811643271281"), 1e-33);
}

TEST_CASE("weighted sums at x = 1/2 in closed form") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    Real half = Real(1) / 2, l2 = constants::log2(), z3 = zeta_int(3), pi = constants::pi();
    auto r = weighted_sum(EulerSumSpec({{1, 1}}, 0, half), ctx);
    CHECK(r.terms_used <= 500);
    CHECK_REL(r.value, 2 * l2, 1e-35);
    CHECK_REL(S({{1, 2}}, 1, half, ctx), 7 * z3 / 8, 1e-35);
    CHECK_REL(S({{2, 1}}, 1, half, ctx), 5 * z3 / 8, 1e-35);
    CHECK_REL(S({{1, 1}}, 2, half, ctx), z3 - pi * pi * l2 / 12, 1e-35);
}

TEST_CASE("sums at x = 1 against closed forms") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    CHECK_REL(sum_at_one(1, 2, ctx).value, 2 * zeta_int(3), 1e-34);
    CHECK_REL(sum_at_one(1, 3, ctx).value, ref("1.3529040421389227393950046206764598784684386898984"), 1e-34);
    CHECK_REL(sum_at_one(2, 3, ctx).value, ref("1.2657381527467236861001116353987229599895902622218"), 1e-34);
    for (auto [p, q] : {std::pair{1, 4}, {2, 2}, {3, 2}, {2, 5}, {4, 3}, {1, 6}})
        CHECK_REL(sum_at_one(p, q, ctx).value, linear_sum_closed(p, q), 1e-33);
    // H_n = H_{n-1} + 1/n
    CHECK_REL(linear_sum_closed(2, 3), sigma_h_closed(2, 3) + zeta_int(5), 1e-35);
    for (int n = 1; n <= 3; ++n) CHECK_REL(sum_at_one(2, 2 * n + 1, ctx).value, georghiou_philippou(n), 1e-33);
}

TEST_CASE("alternating sums") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    CHECK_REL(alternating_mu(0, ctx).value, ref("0.58224052646501250590265632015968010874419847480613"), 1e-34);
    for (int q = 0; q <= 1; ++q) CHECK_REL(alternating_mu(q, ctx).value, mu_closed(q), 1e-33);
    for (int q = 2; q <= 4; ++q) CHECK_REL(alt_inner_binomial(q, Real(1), ctx).value, sitaramachandrarao(q), 1e-33);
}

TEST_CASE("inner alternating sum at t = 1/2 against a separate double-sum form") {
    PrecisionScope scope(50);
    PrecisionContext ctx(40);
    // sum_n n^-2 (log(3/2) - tail_n), tail_n = sum_{k>n} (-1)^(k+1) 2^-k / k
    Real t = Real(1) / 2, brute = zeta_int(2) * log(Real(3) / 2);
    for (int n = 1; n < 200; ++n) {
        Real tail = 0;
        for (int k = n + 1; k < n + 200; ++k) tail += ((k & 1) ? 1 : -1) * pow(t, k) / k;
        brute -= tail / (Real(n) * n);
    }
    CHECK_REL(alt_inner_binomial(2, t, ctx).value, brute, 1e-34);
}

TEST_CASE("generating functions of the harmonic numbers") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    double tol = 10 * ctx.tolerance;
    Real z3 = zeta_int(3), z4 = zeta_int(4);
    for (const char* xs : {"0.25", "0.5", "0.75"}) {
        Real x(xs), l = log(1 - x), lx = log(x);
        auto li = [](int n, const Real& v) { return polylog(n, v); };
        Real landen = -x / (1 - x);
        Real h1n1 = S({{1, 1}}, 1, x, ctx), h1n2 = S({{1, 1}}, 2, x, ctx), h1n3 = S({{1, 1}}, 3, x, ctx);
        Real h2n1 = S({{2, 1}}, 1, x, ctx), h2n2 = S({{2, 1}}, 2, x, ctx), h11n1 = S({{1, 2}}, 1, x, ctx);
        Real h11n2 = S({{1, 2}}, 2, x, ctx);
        Real h3n1 = S({{3, 1}}, 1, x, ctx), h111n1 = S({{1, 3}}, 1, x, ctx), h12n1 = S({{1, 1}, {2, 1}}, 1, x, ctx);
        CAPTURE(xs);

        CHECK_REL(h1n1, l * l / 2 + li(2, x), tol);
        CHECK_REL(h1n2, l * l * lx / 2 + l * li(2, 1 - x) + li(3, x) - li(3, 1 - x) + z3, tol);
        CHECK_REL(2 * h1n2 + h2n1 - h11n1, l * l * l / 3 + 2 * li(3, x), tol);
        CHECK_REL(h2n1, li(3, x) - l * li(2, x) - lx * l * l - 2 * l * li(2, 1 - x) + 2 * li(3, 1 - x) - 2 * z3, tol);
        CHECK_REL(2 * h11n1,
                  l * l * lx - l * l * l / 3 + 2 * l * li(2, 1 - x) - 2 * li(3, 1 - x) + 2 * z3 - 2 * li(3, landen), tol);
        CHECK_REL(h2n1,
                  (-l * l * lx + l * l * l / 3 - 2 * l * li(2, 1 - x) + 2 * li(3, 1 - x) - 2 * z3 - 2 * li(3, landen)) / 2,
                  tol);
        CHECK_REL(h11n1 - h2n1, -l * l * l / 3 + l * l * lx + 2 * l * li(2, 1 - x) - 2 * li(3, 1 - x) + 2 * z3, tol);
        CHECK_REL(2 * h1n3 + h2n2 - h11n2,
                  l * l * l * lx / 3 + l * l * li(2, 1 - x) - 2 * l * li(3, 1 - x) + 2 * li(4, 1 - x) + 2 * li(4, x) -
                      2 * z4,
                  tol);
        CHECK_REL(2 * h1n3 + h2n2, 3 * li(4, x) + li(2, x) * li(2, x) / 2, tol);
        CHECK_REL(h11n1, -l * l * l / 3 + li(3, x) - li(2, x) * l, tol);
        CHECK_REL(h11n2,
                  li(4, x) + li(2, x) * li(2, x) / 2 -
                      (l * l * l * lx + 3 * l * l * li(2, 1 - x) - 6 * l * li(3, 1 - x) + 6 * li(4, 1 - x) - 6 * z4) / 3,
                  tol);
        CHECK_REL(h111n1 / 3 - h11n2 + 2 * h1n3 - h12n1 + h2n2 + 2 * h3n1 / 3, l * l * l * l / 12 + 2 * li(4, x), tol);
        CHECK_REL(h1n2,
                  -li(2, x) * lx - li(2, landen) * lx + l * li(2, 1 - x) - li(3, 1 - x) + li(3, x) + z3, tol);
        CHECK_REL(h1n2, l * l * lx / 2 + l * li(2, 1 - x) - li(3, 1 - x) + li(3, x) + z3, tol);
        CHECK_REL(2 * h3n1 - 3 * h12n1 + h111n1,
                  l * l * l * l / 4 - l * l * l * lx - 3 * l * l * li(2, 1 - x) + 6 * l * li(3, 1 - x) -
                      6 * li(4, 1 - x) + 6 * z4,
                  tol);
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS(EulerSumSpec({{0, 1}}, 2).validate());
    CHECK_THROWS(EulerSumSpec({{1, 1}}, 2, Real("1.5")).validate());
    CHECK(EulerSumSpec({{1, 2}, {2, 1}}, 3).weight() == 7);
}

TEST_CASE("every known value is finite") {
    PrecisionScope scope(40);
    auto keys = known_value_keys();
    CHECK(keys.size() >= 20);
    for (auto& k : keys) {
        CAPTURE(k);
        Real v = known_value(k);
        CHECK(isfinite(v));
    }
    CHECK_THROWS(known_value("no-such-key"));
}
