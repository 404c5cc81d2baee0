#include "zetakit/zeta.hpp"

#include "zetakit/asymptotic.hpp"
#include "zetakit/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace zetakit {

namespace {

PrecisionContext inner_ctx(int digits, std::size_t budget = 100000) {
    return PrecisionContext(std::max(digits, 10), std::pow(10.0, -digits), budget);
}

bool as_int(const Real& s, long& out) {
    if (!is_integer(s) || abs(s) > 100000) return false;
    out = s.convert_to<long>();
    return true;
}

SeriesResult exact_result(const Rational& q, std::size_t terms) {
    SeriesResult r;
    r.value = to_real(q);
    r.error_estimate = 0;
    r.terms_used = terms;
    r.converged = true;
    return r;
}

void require_positive(const Real& v, const char* what) {
    if (!(v > 0)) throw DomainError(std::string(what) + " must be positive");
}

// zeta(s, a) as sum_{j<m} (a+j)^-s plus the Hasse series at a+m. Near a = 1
// the outer terms carry powers of log n and no sequence transform handles
// them well; at a+m ~ digits+20 they fall off faster than any power.
SeriesResult shifted_hasse(const Real& s, const Real& a, const PrecisionContext& ctx) {
    double shift_to = ctx.digits + 20;
    long m = std::max(0L, static_cast<long>(std::ceil(shift_to - a.convert_to<double>())));
    Real head = 0;
    {
        PrecisionScope scope(ctx.digits + 10);
        for (long j = 0; j < m; ++j) head += pow(a + j, -s);
    }
    // for s < 1 the head grows like m^(1-s) and cancels against the tail
    double lost = std::max(0.0, std::log10(std::max(1.0, abs(head).convert_to<double>())));
    int digits = ctx.digits + static_cast<int>(std::ceil(lost)) + 5;
    PrecisionContext tail_ctx(digits, ctx.tolerance / (10 * std::pow(10.0, lost)), ctx.max_terms);

    // terms behave like Gamma(a') n^-a'; aim the guard digits at where they drop below tol
    double a_shift = a.convert_to<double>() + static_cast<double>(m);
    double n_target = a_shift / std::exp(1.0) * std::pow(10.0, (digits + 5) / a_shift) * 1.3 + 20;
    BinomialSeries spec;
    Real sv = s, av = a + m;
    spec.outer = [sv](std::size_t n) { return 1 / (Real(n + 1) * (sv - 1)); };
    spec.inner = [sv, av](std::size_t k) { return pow(Real(k) + av, 1 - sv); };
    spec.lambda = 1;
    spec.x = -1;
    spec.contraction = std::pow(10.0, -(digits + 5) / (n_target - 10));
    SeriesResult r = binomial_double_series(spec, tail_ctx);
    r.value += head;
    r.terms_used += static_cast<std::size_t>(m);
    return r;
}

}  // namespace

Rational zeta_alt_neg_int(int m) {
    if (m < 0) throw DomainError("zeta_alt_neg_int: m >= 0");
    // inner sums vanish once n > m
    Rational total = 0;
    for (int n = 0; n <= m; ++n) {
        Integer inner = 0;
        for (int k = 0; k <= n; ++k) {
            Integer t = binomial_int(n, k) * pow(Integer(k + 1), static_cast<unsigned>(m));
            if (k & 1)
                inner -= t;
            else
                inner += t;
        }
        total += Rational(inner, pow(Integer(2), static_cast<unsigned>(n + 1)));
    }
    return total;
}

Rational zeta_neg_int(int m) {
    if (m < 0) throw DomainError("zeta_neg_int: m >= 0");
    Rational b = bernoulli_number(m + 1);
    Rational v = b / Rational(m + 1);
    // (-1)^m B_{m+1}/(m+1); agrees with -B_{m+1}/(m+1) for m >= 1
    return (m & 1) ? -v : v;
}

Rational zeta_hasse_neg_int(int m) {
    if (m < 0) throw DomainError("zeta_hasse_neg_int: m >= 0");
    Rational total = 0;
    for (int n = 0; n <= m + 1; ++n) {
        Integer inner = 0;
        for (int k = 0; k <= n; ++k) {
            Integer t = binomial_int(n, k) * pow(Integer(k + 1), static_cast<unsigned>(m + 1));
            if (k & 1)
                inner -= t;
            else
                inner += t;
        }
        total += Rational(inner, Integer(n + 1));
    }
    return total / Rational(-m - 1);
}

SeriesResult zeta_alt_sondow(const Real& s, const PrecisionContext& ctx) {
    long si;
    if (as_int(s, si) && si <= 0) return exact_result(zeta_alt_neg_int(static_cast<int>(-si)), -si + 1);
    if (as_int(s, si)) {
        SeriesResult r;
        {
            PrecisionScope scope(ctx.digits + 10);
            Real half = Real(1) / 2;
            r = sum_series(
                [&](std::size_t n) {
                    return to_real(alternating_binomial_inner(static_cast<long>(n), static_cast<int>(si))) *
                           pow(half, static_cast<long>(n + 1));
                },
                ctx, 0);
        }
        return r;
    }
    BinomialSeries spec;
    Real sv = s;
    spec.outer = [](std::size_t n) { return pow(Real(2), -static_cast<long>(n + 1)); };
    spec.inner = [sv](std::size_t k) { return pow(Real(k + 1), -sv); };
    spec.lambda = 1;
    spec.x = -1;
    spec.contraction = 0.5;
    return binomial_double_series(spec, ctx);
}

SeriesResult zeta_alt_amore(const Real& s, const Real& lambda, const PrecisionContext& ctx) {
    require_positive(lambda, "lambda");
    if (lambda == 1) return zeta_alt_sondow(s, ctx);
    double l = lambda.convert_to<double>();
    BinomialSeries spec;
    Real sv = s, lv = lambda;
    spec.outer = [lv](std::size_t n) { return pow(1 + lv, -static_cast<long>(n + 1)); };
    spec.inner = [sv](std::size_t k) { return pow(Real(k + 1), -sv); };
    spec.lambda = lambda;
    spec.x = -1;
    spec.contraction = std::max(l, std::fabs(1 - l)) / (1 + l);
    return binomial_double_series(spec, ctx);
}

void zeta_alt_amore_partials(const Real& s, const Real& lambda, const PrecisionContext& ctx,
                             const std::function<bool(std::size_t, const Real&)>& visit) {
    require_positive(lambda, "lambda");
    // inner sums are at most (1+lambda)^n and get scaled by (1+lambda)^-(n+1),
    // so a fixed guard keeps the absolute error flat
    PrecisionScope scope(ctx.digits + 10);
    Real lv = lambda, sv = s, partial = 0, scale = 1 / (1 + lv);
    std::vector<Real> powers;
    for (std::size_t n = 0; n < ctx.max_terms; ++n) {
        powers.push_back(pow(Real(n + 1), -sv));
        // C(n,k) lambda^(n-k) (-1)^k, k = 0..n
        Real c = pow(lv, static_cast<long>(n)), inner = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            inner += (k & 1) ? Real(-c * powers[k]) : Real(c * powers[k]);
            c = c * Real(n - k) / (Real(k + 1) * lv);
        }
        partial += inner * scale;
        scale /= 1 + lv;
        if (!visit(n + 1, partial)) return;
    }
}

SeriesResult zeta_amore_coffey(const Real& s, const Real& lambda, const PrecisionContext& ctx) {
    if (s == 1) throw DomainError("zeta has a pole at s = 1");
    SeriesResult r = zeta_alt_amore(s, lambda, ctx);
    PrecisionScope scope(ctx.digits + 10);
    Real f = 1 - pow(Real(2), 1 - s);
    r.value /= f;
    r.error_estimate /= abs(f);
    return r;
}

SeriesResult zeta_alt_derivative(const Real& s, const Real& lambda, const PrecisionContext& ctx) {
    require_positive(lambda, "lambda");
    double l = lambda.convert_to<double>();
    BinomialSeries spec;
    Real sv = s, lv = lambda;
    spec.outer = [lv](std::size_t n) { return -pow(1 + lv, -static_cast<long>(n + 1)); };
    spec.inner = [sv](std::size_t k) { return log(Real(k + 1)) * pow(Real(k + 1), -sv); };
    spec.lambda = lambda;
    spec.x = -1;
    spec.contraction = std::max(l, std::fabs(1 - l)) / (1 + l);
    return binomial_double_series(spec, ctx);
}

SeriesResult zeta_alt_derivative(const Real& s, const PrecisionContext& ctx) {
    require_positive(s, "s");
    return zeta_alt_derivative(s, s, ctx);
}

SeriesResult zeta_hasse(const Real& s, const PrecisionContext& ctx) {
    if (s == 1) throw DomainError("zeta has a pole at s = 1");
    long si;
    if (as_int(s, si) && si <= 0) return exact_result(zeta_hasse_neg_int(static_cast<int>(-si)), -si + 2);
    if (as_int(s, si) && si == 2) {
        // outer terms are exactly 1/(n+1)^2, accelerated
        SeriesResult r;
        {
            PrecisionScope scope(2 * ctx.digits + 10);
            r = levin_sum(
                [](std::size_t n) {
                    return to_real(alternating_binomial_inner(static_cast<long>(n), 1)) / Real(n + 1);
                },
                ctx, 200);
        }
        return r;
    }
    if (as_int(s, si)) {
        // outer term for N = n+1 is (-S_N(s-2)) / ((s-1) N^2); the tail comes
        // from the large-N expansion of the harmonic numbers
        HarmonicPolynomial poly = flajolet_polynomial(static_cast<int>(si - 2));
        for (auto& m : poly) m.coef /= Rational(si - 1);
        return harmonic_polynomial_sum(poly, 2, false, ctx);
    }
    return shifted_hasse(s, Real(1), ctx);
}

SeriesResult hurwitz_hasse(const Real& s, const Real& a, const PrecisionContext& ctx) {
    if (s == 1) throw DomainError("zeta has a pole at s = 1");
    require_positive(a, "Hurwitz shift a");
    if (a == 1) return zeta_hasse(s, ctx);
    return shifted_hasse(s, a, ctx);
}

SeriesResult alt_hurwitz(const Real& s, const Real& u, const PrecisionContext& ctx) {
    require_positive(u, "alternating shift u");
    if (u == 1) return zeta_alt_sondow(s, ctx);
    BinomialSeries spec;
    Real sv = s, uv = u;
    spec.outer = [](std::size_t n) { return pow(Real(2), -static_cast<long>(n + 1)); };
    spec.inner = [sv, uv](std::size_t k) { return pow(Real(k) + uv, -sv); };
    spec.lambda = 1;
    spec.x = -1;
    spec.contraction = 0.5;
    return binomial_double_series(spec, ctx);
}

Real zeta_even_bernoulli(int n) {
    if (n < 1) throw DomainError("zeta_even_bernoulli: n >= 1");
    Rational c = bernoulli_number(2 * n) * Rational(pow(Integer(2), static_cast<unsigned>(2 * n - 1))) /
                 Rational(factorial(2 * n));
    if (!(n & 1)) c = -c;
    return to_real(c) * pow(constants::pi(), 2 * n);
}

namespace {
std::mutex zeta_cache_mutex;
std::map<std::pair<int, unsigned>, Real> zeta_cache;
}  // namespace

Real zeta_int(int s) {
    if (s == 1) throw DomainError("zeta has a pole at s = 1");
    if (s <= 0) return to_real(zeta_neg_int(-s));
    unsigned prec = Real::default_precision();
    auto key = std::make_pair(s, prec);
    {
        std::lock_guard<std::mutex> lock(zeta_cache_mutex);
        auto it = zeta_cache.find(key);
        if (it != zeta_cache.end()) return it->second;
    }
    Real v;
    if (!(s & 1)) {
        PrecisionScope scope(static_cast<int>(prec) + 10);
        v = zeta_even_bernoulli(s / 2);
    } else {
        auto r = zeta_alt_sondow(Real(s), inner_ctx(static_cast<int>(prec) + 5));
        PrecisionScope scope(static_cast<int>(prec) + 10);
        v = r.value / (1 - pow(Real(2), 1 - s));
    }
    Real out = rounded(v);
    std::lock_guard<std::mutex> lock(zeta_cache_mutex);
    zeta_cache.emplace(key, out);
    return out;
}

Real zeta_alt_int(int s) {
    if (s == 1) return constants::log2();
    if (s <= 0) return to_real(zeta_alt_neg_int(-s));
    return rounded((1 - pow(Real(2), 1 - s)) * zeta_int(s));
}

}  // namespace zetakit
