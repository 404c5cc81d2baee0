#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "zetakit/zeta.hpp"

using namespace zetakit;
using zetakit::test::ref;

namespace {

const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
const char* kEta3 = "0.90154267736969571404980362113358749307373971925537";

}  // namespace

TEST_CASE("hasse series at integers and non-integers") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    auto z2 = zeta_hasse(Real(2), ctx);
    CHECK(z2.converged);
    CHECK(z2.terms_used <= 200);
    CHECK_REL(z2.value, constants::pi() * constants::pi() / 6, 1e-35);
    CHECK_REL(zeta_hasse(Real(3), ctx).value, ref(kZeta3), 1e-35);
    CHECK_REL(zeta_hasse(Real("0.5"), ctx).value, ref("-1.4603545088095868128894991525152980124672293310126"), 1e-34);
    CHECK_REL(zeta_hasse(Real("-1.5"), ctx).value, ref("-0.025485201889833035949542986910704745469024984600973"), 1e-33);
    CHECK_THROWS_AS(zeta_hasse(Real(1), ctx), DomainError);
}

TEST_CASE("sondow series for the alternating zeta") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    CHECK_REL(zeta_alt_sondow(Real(3), ctx).value, ref(kEta3), 1e-35);
    CHECK_REL(zeta_alt_sondow(Real("2.5"), ctx).value, ref("0.8671998890121841381913471776789571524992770777766"), 1e-35);
    CHECK_REL(zeta_alt_sondow(Real(1), ctx).value, constants::log2(), 1e-35);
}

TEST_CASE("exact values at non-positive integers") {
    CHECK(zeta_alt_neg_int(0) == Rational(1, 2));
    CHECK(zeta_alt_neg_int(1) == Rational(1, 4));
    CHECK(zeta_alt_neg_int(2) == 0);
    CHECK(zeta_neg_int(0) == Rational(-1, 2));
    CHECK(zeta_neg_int(1) == Rational(-1, 12));
    CHECK(zeta_neg_int(3) == Rational(1, 120));
    for (int n = 1; n <= 3; ++n) CHECK(zeta_neg_int(2 * n) == 0);
    for (int m = 0; m <= 12; ++m) {
        CHECK(zeta_hasse_neg_int(m) == zeta_neg_int(m));
        // zeta_a(-m) = (1 - 2^(1+m)) zeta(-m)
        CHECK(zeta_alt_neg_int(m) == (1 - rational_pow(Rational(2), static_cast<unsigned>(m + 1))) * zeta_neg_int(m));
    }
}

TEST_CASE("lambda family does not depend on lambda") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    const char* lambdas[] = {"0.3", "0.449408149787716779307327177571409", "1", "2"};
    for (const char* s : {"2", "3", "0.5", "4.25"}) {
        Real sv(s);
        Real base = zeta_alt_amore(sv, Real(1), ctx).value;
        for (const char* l : lambdas) CHECK_REL(zeta_alt_amore(sv, Real(l), ctx).value, base, 1e-32);
    }
    CHECK_REL(zeta_alt_amore(Real(3), Real(1), ctx).value, zeta_alt_sondow(Real(3), ctx).value, 1e-35);
    CHECK_THROWS_AS(zeta_alt_amore(Real(3), Real(0), ctx), DomainError);
}

TEST_CASE("lambda partial sums approach the full value") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    Real target = ref(kEta3), last;
    std::size_t seen = 0;
    zeta_alt_amore_partials(Real(3), constants::lambda_m(), ctx, [&](std::size_t n, const Real& partial) {
        seen = n;
        last = partial;
        return abs(partial - target) > Real("1e-30");
    });
    CHECK(seen < 150);
    CHECK(abs(last - target) <= Real("1e-30"));
}

TEST_CASE("zeta through the lambda family") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    CHECK_REL(zeta_amore_coffey(Real("1.5"), constants::lambda_m(), ctx).value,
              ref("2.6123753486854883433485675679240716305708006524001"), 1e-34);
    CHECK_THROWS_AS(zeta_amore_coffey(Real(1), Real(1), ctx), DomainError);
}

TEST_CASE("hurwitz and alternating hurwitz") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    Real third = Real(1) / 3;
    CHECK_REL(hurwitz_hasse(Real(2), third, ctx).value, ref("10.095597125427094081792004099892516360518904119281"), 1e-34);
    CHECK_REL(hurwitz_hasse(Real(3), Real("2.5"), ctx).value, ref("0.1181020258208637015018708342838536390586077500872"),
              1e-34);
    CHECK_REL(hurwitz_hasse(Real(3), Real(1), ctx).value, ref(kZeta3), 1e-35);
    CHECK_REL(hurwitz_hasse(Real(3), Real("0.35"), ctx).value, ref("23.86689495661786468241303225902951387965"), 1e-34);
    CHECK_REL(hurwitz_hasse(Real(2), Real(1) / 2, ctx).value, constants::pi() * constants::pi() / 2, 1e-34);
    CHECK_REL(hurwitz_hasse(Real(2), Real(2), ctx).value, zeta_int(2) - 1, 1e-34);
    CHECK_REL(alt_hurwitz(Real(2), third, ctx).value, ref("8.5636594207477353767983454832546737839025565740943"), 1e-34);
    // Phi(-1, s, u) splits into two Hurwitz values
    Real u("0.7"), s(3);
    Real split = (hurwitz_hasse(s, u / 2, ctx).value - hurwitz_hasse(s, (u + 1) / 2, ctx).value) / 8;
    CHECK_REL(alt_hurwitz(s, u, ctx).value, split, 1e-33);
}

TEST_CASE("derivative of the alternating zeta") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    CHECK_REL(zeta_alt_derivative(Real(2), ctx).value, ref("0.10131657816350450188600288221224218365938477637491"), 1e-32);
    CHECK_REL(zeta_alt_derivative(Real("0.5"), ctx).value, ref("0.19328883163928273896461545935523811429527022252922"),
              1e-32);
    CHECK_REL(zeta_alt_derivative(Real(2), Real("0.7"), ctx).value, zeta_alt_derivative(Real(2), ctx).value, 1e-32);
}

TEST_CASE("even zeta values from bernoulli numbers") {
    PrecisionScope scope(40);
    PrecisionContext ctx(40);
    for (int n = 1; n <= 6; ++n) CHECK_REL(zeta_even_bernoulli(n), zeta_hasse(Real(2 * n), ctx).value, 1e-35);
    CHECK_REL(zeta_int(3), ref(kZeta3), 1e-38);
    CHECK_REL(zeta_alt_int(1), constants::log2(), 1e-38);
    CHECK_THROWS(zeta_int(1));
}
