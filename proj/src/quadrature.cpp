#include "zetakit/quadrature.hpp"

#include "zetakit/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace zetakit {

IntegralSpec IntegralSpec::plain(std::function<Real(const Real&)> f, Real a, Real b) {
    return IntegralSpec([f](const Real& x, const Real&, const Real&) { return f(x); }, std::move(a), std::move(b));
}

namespace {

constexpr int kMaxLevel = 9;  // 8 * 2^9 = 4096 intervals

}  // namespace

SeriesResult integrate(const IntegralSpec& spec, const PrecisionContext& ctx) {
    if (!(spec.lower < spec.upper)) throw DomainError("integrate: lower < upper required");
    SeriesResult res;
    {
        PrecisionScope scope(ctx.digits + 10);
        Real a = spec.lower, b = spec.upper;
        Real width = b - a, half = width / 2;
        Real pi = constants::pi();
        Real halfpi = pi / 2;

        // nodes closer than 10^-(1.5 d + 20) to an endpoint carry no weight
        double tiny_log = (1.5 * ctx.digits + 20) * std::log(10.0) + std::log(width.convert_to<double>());
        double u_max = std::max(tiny_log / 2, 1.0);
        double t_max = std::asinh(2 * u_max / M_PI);
        Real h = Real(t_max) / 4;

        std::size_t evals = 0;
        auto node = [&](const Real& t) -> Real {
            Real u = halfpi * sinh(t);
            Real e2 = exp(2 * u);
            Real from_lower = width / (1 + 1 / e2);
            Real to_upper = width / (1 + e2);
            if (from_lower == 0 || to_upper == 0) return Real(0);
            Real ch = cosh(u);
            Real w = half * halfpi * cosh(t) / (ch * ch);
            // from the nearer endpoint, so x = a + tiny does not round onto a
            Real x = from_lower <= to_upper ? Real(a + from_lower) : Real(b - to_upper);
            ++evals;
            Real fx = spec.integrand(x, from_lower, to_upper);
            if (isnan(fx)) throw std::runtime_error("integrate: NaN integrand value");
            return w * fx;
        };

        // level 0: t = j h for |j| <= 4
        Real sum = node(Real(0));
        for (int j = 1; j <= 4; ++j) sum += node(Real(j) * h) + node(Real(-j) * h);
        Real estimate = sum * h, previous = estimate;
        Real diff = abs(estimate);
        int level = 0;
        for (level = 1; level <= kMaxLevel; ++level) {
            h /= 2;
            long count = 4L << level;  // odd multiples of h up to t_max
            for (long j = 1; j < count; j += 2) sum += node(Real(j) * h) + node(Real(-j) * h);
            previous = estimate;
            estimate = sum * h;
            diff = abs(estimate - previous);
            Real scale = abs(estimate);
            if (scale < 1) scale = 1;
            if (level >= 3 && diff <= ctx.tolerance * scale) {
                res.converged = true;
                break;
            }
        }
        res.value = estimate;
        res.error_estimate = diff;
        res.terms_used = evals;
    }
    return res;
}

SeriesResult cot_moment(int n, const PrecisionContext& ctx) {
    if (n != 1 && n != 2) throw DomainError("cot_moment: n must be 1 or 2");
    Real upper = constants::pi() / 2;
    IntegralSpec spec(
        [n](const Real&, const Real& x, const Real& to_upper) {
            // cot x = tan(pi/2 - x)
            return pow(x, n) * tan(to_upper);
        },
        Real(0), upper);
    return integrate(spec, ctx);
}

Real bernoulli_cot_integrand(int n, const Real& x) {
    int m = 2 * n + 1;
    if (x < Real("1e-3")) {
        // B_m(x)/x as a polynomial (B_m = 0), times x cot(pi x) as a series
        Real poly = 0, xp = 1;
        for (int k = m - 1; k >= 0; --k) {
            poly += to_real(binomial(m, k) * bernoulli_number(k)) * xp;
            xp *= x;
        }
        Real pi = constants::pi();
        Real z2 = (2 * pi * x) * (2 * pi * x);
        Real eps = pow(Real(10), -current_digits());
        Real cot_series = 0, zp = 1;
        Rational fact = 1;
        for (int k = 0; k < 200; ++k) {
            if (k > 0) {
                fact *= Rational((2 * k - 1) * (2 * k));
                zp *= z2;
            }
            // pi x cot(pi x) = sum (-1)^k B_2k (2 pi x)^2k / (2k)!
            Real t = to_real(bernoulli_number(2 * k) / fact) * zp;
            if (k & 1) t = -t;
            cot_series += t;
            if (k > 0 && abs(t) < eps * abs(cot_series)) break;
        }
        return poly * cot_series / pi;
    }
    Real px = constants::pi() * x;
    return bernoulli_polynomial(m, x) * cos(px) / sin(px);
}

SeriesResult zeta_odd_cot(int n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("zeta_odd_cot: n >= 1 required");
    IntegralSpec spec([n](const Real&, const Real& x, const Real&) { return bernoulli_cot_integrand(n, x); },
                      Real(0), Real(1) / 2);
    SeriesResult r = integrate(spec, ctx);
    PrecisionScope scope(ctx.digits + 10);
    Real c = pow(2 * constants::pi(), 2 * n + 1) / to_real(factorial(2 * n + 1));
    if (!(n & 1)) c = -c;
    r.value *= c;
    r.error_estimate *= abs(c);
    return r;
}

namespace {

// polynomial in b = pi/2 with rational coefficients
using BPoly = std::vector<Rational>;

void add_scaled(BPoly& acc, const BPoly& p, const Rational& c) {
    if (acc.size() < p.size()) acc.resize(p.size(), Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) acc[j] += c * p[j];
}

// int_0^b x^d cos(2kx) and sin(2kx), b = pi/2, d = 0..degree
void inner_integrals(long k, int degree, std::vector<BPoly>& C, std::vector<BPoly>& S) {
    C.assign(degree + 1, BPoly(degree + 2, Rational(0)));
    S.assign(degree + 1, BPoly(degree + 2, Rational(0)));
    if (k == 0) {
        for (int d = 0; d <= degree; ++d) C[d][d + 1] = Rational(1, d + 1);
        return;
    }
    Rational c(2 * k);
    Rational sign = (k & 1) ? Rational(-1) : Rational(1);  // cos(k pi)
    // sin(k pi) = 0 kills every [x^d sin(cx)/c] boundary term
    S[0][0] = (1 - sign) / c;
    for (int d = 1; d <= degree; ++d) {
        add_scaled(C[d], S[d - 1], -Rational(d) / c);
        S[d][d] -= sign / c;
        add_scaled(S[d], C[d - 1], Rational(d) / c);
    }
}

Real eval_bpoly(const BPoly& p) {
    Real b = constants::pi() / 2, v = 0, bp = 1;
    for (auto& c : p) {
        v += to_real(c) * bp;
        bp *= b;
    }
    return v;
}

}  // namespace

PartialSums basic_identity_partial(int N, int degree, Side side) {
    if (N < 0 || N > 200) throw DomainError("basic_identity_partial: 0 <= N <= 200");
    if (degree < 1 || degree > 3) throw DomainError("basic_identity_partial: degree in 1..3");
    std::vector<BPoly> I(N + 1);
    for (long k = 0; k <= N; ++k) {
        std::vector<BPoly> C, S;
        inner_integrals(k, degree, C, S);
        I[k] = side == Side::Cos ? C[degree] : S[degree];
    }
    PartialSums out;
    BPoly acc(degree + 2, Rational(0));
    Rational weight = 1;
    for (long n = 0; n <= N; ++n) {
        if (n > 0) weight /= 2;
        if (side == Side::Cos || n >= 1) {
            BPoly inner(degree + 2, Rational(0));
            Integer c = 1;
            for (long k = 0; k <= n; ++k) {
                if (k > 0) c = c * (n - k + 1) / k;
                if (side == Side::Sin && k == 0) continue;
                add_scaled(inner, I[k], Rational(c));
            }
            add_scaled(acc, inner, weight);
        }
        out.sums.push_back(eval_bpoly(acc));
    }
    Real pi = constants::pi(), b = pi / 2, l2 = constants::log2();
    if (side == Side::Cos) {
        out.target = pow(b, degree + 1) / (degree + 1);
    } else if (degree == 1) {
        out.target = b * l2;
    } else if (degree == 2) {
        out.target = -Real(7) / 8 * zeta_int(3) + pi * pi / 4 * l2;
    } else {
        out.target = pow(pi, 3) / 8 * l2 - Real(9) / 16 * pi * zeta_int(3);
    }
    return out;
}

}  // namespace zetakit
