#include "zetakit/polylog.hpp"

#include "zetakit/combinatorics.hpp"
#include "zetakit/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace zetakit {

namespace {

SeriesResult closed(const Real& v) {
    SeriesResult r;
    r.value = v;
    r.error_estimate = abs(v) * pow(Real(10), -current_digits());
    r.terms_used = 0;
    r.converged = true;
    return r;
}

bool as_int(const Real& s, long& out) {
    if (!is_integer(s) || abs(s) > 10000) return false;
    out = s.convert_to<long>();
    return true;
}

SeriesResult power_series(const Real& x, const Real& s, const Real& u, const PrecisionContext& ctx,
                          std::size_t first) {
    // sum_{k>=first} x^k / (k+u)^s, terms requested in order
    PrecisionScope scope(ctx.digits + 5);
    Real p = pow(x, static_cast<long>(first));
    Real xv = x, sv = s, uv = u;
    long si;
    bool int_s = as_int(s, si) && si >= 0;
    return sum_series(
        [&](std::size_t k) {
            Real d = Real(k) + uv;
            Real t = int_s ? p / pow(d, si) : p * pow(d, -sv);
            p *= xv;
            return t;
        },
        ctx, first);
}

}  // namespace

SeriesResult li_direct(const Real& s, const Real& x, const PrecisionContext& ctx) {
    if (abs(x) > 1) throw DomainError("li_direct: |x| <= 1 required");
    if (s == 0) {
        if (x == 1) throw DomainError("Li_0 diverges at x = 1");
        return closed(x / (1 - x));
    }
    if (s == -1) {
        if (x == 1) throw DomainError("Li_-1 diverges at x = 1");
        return closed(x / ((1 - x) * (1 - x)));
    }
    if (s == 1) {
        if (x == 1) throw DomainError("Li_1 diverges at x = 1");
        return closed(-log(1 - x));
    }
    long si;
    if (x == 1) {
        if (s < 1) throw DomainError("Li_s(1) diverges for s <= 1");
        if (as_int(s, si)) {
            PrecisionScope scope(ctx.digits + 5);
            return closed(zeta_int(static_cast<int>(si)));
        }
        return zeta_amore_coffey(s, constants::lambda_m(), ctx);
    }
    if (x == -1) {
        SeriesResult r;
        if (as_int(s, si) && si >= 1) {
            PrecisionScope scope(ctx.digits + 5);
            r = closed(zeta_alt_int(static_cast<int>(si)));
        } else {
            r = zeta_alt_sondow(s, ctx);
        }
        r.value = -r.value;
        return r;
    }
    if (s < 1 && abs(x) == 1) throw DomainError("li_direct: |x| < 1 required for s <= 1");
    return power_series(x, s, Real(0), ctx, 1);
}

SeriesResult li_binomial(const Real& s, const Real& x, const PrecisionContext& ctx) {
    if (x < -1 || x > 1) throw DomainError("li_binomial: -1 <= x <= 1 required");
    if (x == 1 && s <= 1) throw DomainError("Li_s(1) diverges for s <= 1");
    BinomialSeries spec;
    Real sv = s;
    spec.outer = [](std::size_t n) { return pow(Real(2), -static_cast<long>(n + 1)); };
    spec.inner = [sv](std::size_t k) { return pow(Real(k), -sv); };
    spec.lambda = 1;
    spec.x = x;
    spec.n0 = 1;
    spec.k0 = 1;
    spec.contraction = std::max(0.5, std::fabs(1 + x.convert_to<double>()) / 2);
    spec.accelerate = x == 1;
    return binomial_double_series(spec, ctx);
}

namespace {

void check_transform_domain(const Real& s, const Real& t, const Real& x) {
    if (!(t > 0 && t < 1)) throw DomainError("binomial transform: 0 < t < 1 required");
    Real y = abs(x * t / (1 - t));
    if (y > 1 || (s <= 1 && y == 1)) throw DomainError("binomial transform: |xt/(1-t)| too large");
}

SeriesResult transform_series(const Real& t, const Real& x, const TermFn& inner, const PrecisionContext& ctx) {
    double td = t.convert_to<double>(), xd = x.convert_to<double>();
    BinomialSeries spec;
    Real tv = t;
    spec.outer = [tv](std::size_t n) { return pow(tv, static_cast<long>(n)); };
    spec.inner = inner;
    spec.lambda = 1;
    spec.x = x;
    spec.n0 = 1;
    spec.k0 = 1;
    spec.contraction = std::max(td, td * std::fabs(1 + xd));
    spec.accelerate = spec.contraction > 0.98;
    return binomial_double_series(spec, ctx);
}

}  // namespace

SeriesResult binomial_transform(const Real& s, const Real& t, const Real& x, const PrecisionContext& ctx) {
    if (t == 0) return closed(Real(0));
    check_transform_domain(s, t, x);
    Real sv = s;
    return transform_series(t, x, [sv](std::size_t k) { return pow(Real(k), -sv); }, ctx);
}

SeriesResult lerch_binomial_transform(const Real& s, const Real& t, const Real& x, const Real& y,
                                      const PrecisionContext& ctx) {
    if (y < 0) throw DomainError("lerch transform: y >= 0 required");
    if (t == 0) return closed(Real(0));
    check_transform_domain(s, t, x);
    Real sv = s, yv = y;
    return transform_series(t, x, [sv, yv](std::size_t k) { return pow(Real(k) + yv, -sv); }, ctx);
}

SeriesResult lerch_phi(const Real& z, const Real& s, const Real& u, const PrecisionContext& ctx) {
    if (!(u > 0)) throw DomainError("lerch_phi: u > 0 required");
    if (abs(z) > 1) throw DomainError("lerch_phi: |z| <= 1 required");
    if (z == 1) {
        if (s <= 1) throw DomainError("lerch_phi: diverges at z = 1 for s <= 1");
        return hurwitz_hasse(s, u, ctx);
    }
    if (z == -1) return alt_hurwitz(s, u, ctx);
    if (z == 0) return closed(pow(u, -s));
    return power_series(z, s, u, ctx, 0);
}

SeriesResult lerch_phi_binomial(const Real& z, const Real& s, const Real& u, const PrecisionContext& ctx) {
    if (u < 1) throw DomainError("lerch_phi_binomial: u >= 1 required");
    if (z == 0) return closed(pow(u, -s));
    Real half = Real(1) / 2;
    SeriesResult r = lerch_binomial_transform(s, half, z, u - 1, ctx);
    r.value /= 2 * z;
    r.error_estimate /= abs(2 * z);
    return r;
}

namespace {

Real eps_now() { return pow(Real(10), -current_digits()); }

Real li_small(int n, const Real& x) {
    Real sum = 0, p = x, eps = eps_now();
    for (long k = 1;; ++k) {
        Real t = p / pow(Real(k), n);
        sum += t;
        if (abs(t) <= eps * abs(sum)) break;
        p *= x;
    }
    return sum;
}

Real zeta_any_int(int s) {
    if (s <= 0) return to_real(zeta_neg_int(-s));
    return zeta_int(s);
}

// expansion in mu = log x about x = 1, valid for |mu| < 2 pi
Real li_log_series(int n, const Real& x) {
    Real mu = log(x);
    double r = std::fabs(mu.convert_to<double>()) / (2 * M_PI);
    long K = n + 2 + static_cast<long>(std::ceil((current_digits() + 2) * std::log(10.0) / -std::log(r)));
    Real sum = 0, mk = 1;
    for (long k = 0; k <= K; ++k) {
        if (k > 0) mk *= mu / k;
        if (k == n - 1) {
            Real h = n > 1 ? to_real(harmonic(n - 1, 1)) : Real(0);
            sum += mk * (h - log(-mu));
        } else {
            sum += zeta_any_int(n - static_cast<int>(k)) * mk;
        }
    }
    return sum;
}

// Re (L + i pi)^m
Real re_log_power(const Real& L, int m, const Real& pi) {
    Real s = 0;
    for (int j = 0; 2 * j <= m; ++j) {
        Real t = to_real(binomial(m, 2 * j)) * pow(L, m - 2 * j) * pow(pi, 2 * j);
        s += (j & 1) ? -t : t;
    }
    return s;
}

Real polylog_impl(int n, const Real& x) {
    if (x == 0) return 0;
    if (n == 1) return x < 1 ? Real(-log(1 - x)) : Real(-log(x - 1));
    if (x == 1) return zeta_int(n);
    if (x == -1) return -zeta_alt_int(n);
    if (abs(x) <= Real(1) / 2) return li_small(n, x);
    if (x > 0 && x < 1) return li_log_series(n, x);
    if (x < 0 && x > -1) return pow(Real(2), 1 - n) * polylog_impl(n, x * x) - polylog_impl(n, -x);
    // |x| > 1: inversion, real part on the cut x > 1
    Real pi = constants::pi();
    Real L = log(abs(x));
    Real v = polylog_impl(n, 1 / x);
    if (!(n & 1)) v = -v;
    Real rest = x < 0 ? Real(pow(L, n)) : re_log_power(L, n, pi);
    rest /= to_real(Rational(factorial(n)));
    for (int k = 1; 2 * k <= n; ++k) {
        Real lp = x < 0 ? Real(pow(L, n - 2 * k)) : re_log_power(L, n - 2 * k, pi);
        rest += 2 * zeta_alt_int(2 * k) * lp / to_real(Rational(factorial(n - 2 * k)));
    }
    return v - rest;
}

}  // namespace

Real polylog(int n, const Real& x) {
    if (n < 1) throw DomainError("polylog: order n >= 1 required");
    if (n == 1 && x == 1) throw DomainError("Li_1 diverges at x = 1");
    Real v;
    {
        PrecisionScope scope(current_digits() + 10);
        v = polylog_impl(n, x);
    }
    return rounded(v);
}

}  // namespace zetakit
