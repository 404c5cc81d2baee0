#include "zetakit/euler_sums.hpp"

#include "zetakit/combinatorics.hpp"
#include "zetakit/polylog.hpp"
#include "zetakit/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace zetakit {

EulerSumSpec::EulerSumSpec(std::vector<std::pair<int, int>> mono, int q_, Real x_, bool alt, bool shift)
    : monomial(std::move(mono)), q(q_), x(std::move(x_)), alternating(alt), shifted(shift) {
    validate();
}

void EulerSumSpec::validate() const {
    for (auto& [r, e] : monomial)
        if (r < 1 || e < 1) throw DomainError("EulerSumSpec: orders and exponents must be >= 1");
    if (q < 0) throw DomainError("EulerSumSpec: q >= 0 required");
    if (abs(x) > 1) throw DomainError("EulerSumSpec: |x| <= 1 required");
    bool positive_at_one = (x == 1 && !alternating) || (x == -1 && alternating);
    if (positive_at_one && q < 2) throw DomainError("EulerSumSpec: diverges at x = 1 unless q >= 2");
    if (abs(x) == 1 && q < 1) throw DomainError("EulerSumSpec: diverges at |x| = 1 unless q >= 1");
}

int EulerSumSpec::weight() const {
    int w = q;
    for (auto& [r, e] : monomial) w += r * e;
    return w;
}

namespace {

int max_order(const HarmonicPolynomial& poly) {
    int m = 1;
    for (auto& mono : poly)
        for (auto& f : mono.factors) m = std::max(m, f.first);
    return m;
}

// running H_n^(r) values, advanced one n at a time
struct HarmonicRun {
    std::vector<Real> H, prev;
    long n = 0;
    explicit HarmonicRun(int max_r) : H(max_r + 1, Real(0)), prev(max_r + 1, Real(0)) {}
    void advance() {
        ++n;
        prev = H;
        Real nn = n;
        for (std::size_t r = 1; r < H.size(); ++r) H[r] += pow(nn, -static_cast<long>(r));
    }
    Real eval(const HarmonicPolynomial& poly, bool shifted) const {
        const auto& use = shifted ? prev : H;
        Real v = 0;
        for (auto& mono : poly) {
            Real t = to_real(mono.coef);
            for (auto& [r, e] : mono.factors) t *= pow(use[r], e);
            v += t;
        }
        return v;
    }
};

// sum_{n>=1} poly(H) x^n / n^q, |x| < 1
SeriesResult direct_sum(const HarmonicPolynomial& poly, int q, const Real& x, bool shifted,
                        const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.digits + 10);
    HarmonicRun run(max_order(poly));
    Real xv = x, xn = 1;
    return sum_series(
        [&](std::size_t n) {
            run.advance();
            xn *= xv;
            return run.eval(poly, shifted) * xn * pow(Real(n), -q);
        },
        ctx, 1);
}

// sum_{n>=1} (-1)^(n+1) poly(H) / n^q through the Euler transform
SeriesResult alternating_at_one(const HarmonicPolynomial& poly, int q, bool shifted, const PrecisionContext& ctx) {
    double n_est = (ctx.digits + 5) / std::log10(2.0) + 10;
    PrecisionScope scope(ctx.digits + static_cast<int>(0.31 * n_est) + 10);
    HarmonicRun run(max_order(poly));
    std::vector<Real> a;
    return euler_transform_sum(
        [&](std::size_t k) {
            while (a.size() <= k) {
                run.advance();
                a.push_back(run.eval(poly, shifted) * pow(Real(run.n), -q));
            }
            return a[k];
        },
        ctx);
}

SeriesResult sum_impl(const HarmonicPolynomial& poly, int q, const Real& x, bool alternating, bool shifted,
                      const PrecisionContext& ctx) {
    // (-1)^(n+1) x^n = -(-x)^n
    if (alternating) {
        SeriesResult r = sum_impl(poly, q, Real(-x), false, shifted, ctx);
        r.value = -r.value;
        return r;
    }
    if (abs(x) < 1) return direct_sum(poly, q, x, shifted, ctx);
    if (x == 1) return harmonic_polynomial_sum(poly, q, shifted, ctx);
    SeriesResult r = alternating_at_one(poly, q, shifted, ctx);
    r.value = -r.value;
    return r;
}

HarmonicPolynomial single(const std::vector<std::pair<int, int>>& mono) {
    HarmonicMonomial m;
    m.coef = 1;
    m.factors = mono;
    return {m};
}

}  // namespace

SeriesResult weighted_sum(const EulerSumSpec& spec, const PrecisionContext& ctx) {
    spec.validate();
    return sum_impl(single(spec.monomial), spec.q, spec.x, spec.alternating, spec.shifted, ctx);
}

SeriesResult polynomial_sum(const HarmonicPolynomial& poly, int q, const Real& x, bool alternating,
                            const PrecisionContext& ctx) {
    if (abs(x) > 1) throw DomainError("polynomial_sum: |x| <= 1 required");
    if (((x == 1 && !alternating) || (x == -1 && alternating)) && q < 2)
        throw DomainError("polynomial_sum: diverges at x = 1 unless q >= 2");
    return sum_impl(poly, q, x, alternating, false, ctx);
}

SeriesResult sum_at_one(int p, int q, const PrecisionContext& ctx) {
    if (p < 1) throw DomainError("sum_at_one: p >= 1 required");
    if (q < 2) throw DomainError("sum_at_one: diverges unless q >= 2");
    HarmonicPolynomial poly = single({{p, 1}});
    if (p == 1) return harmonic_polynomial_sum(poly, q, false, ctx, tail_plan_for_depth(4, ctx.tolerance));
    return harmonic_polynomial_sum(poly, q, false, ctx);
}

namespace {

// zeta(k) with zeta(1) read as 0
Real zeta_or_nil(int k) { return k == 1 ? Real(0) : zeta_int(k); }

Real binom_real(long n, long k) { return to_real(binomial(n, k)); }

}  // namespace

Real linear_sum_closed(int p, int q) {
    if (p < 1 || q < 2) throw DomainError("linear_sum_closed: p >= 1, q >= 2 required");
    int m = p + q;
    if (m & 1) {
        Real sp = (p & 1) ? Real(-1) : Real(1);  // (-1)^p
        Real v = zeta_int(m) * (Real(1) / 2 - sp / 2 * binom_real(m - 1, p) - sp / 2 * binom_real(m - 1, q));
        if (p & 1) v += zeta_or_nil(p) * zeta_or_nil(q);
        for (int k = 1; k <= p / 2; ++k)
            v += sp * binom_real(m - 2 * k - 1, q - 1) * zeta_int(2 * k) * zeta_or_nil(m - 2 * k);
        for (int k = 1; k <= q / 2; ++k)
            v += sp * binom_real(m - 2 * k - 1, p - 1) * zeta_int(2 * k) * zeta_or_nil(m - 2 * k);
        return v;
    }
    if (p == 1) {
        Real v = (1 + Real(q) / 2) * zeta_int(q + 1);
        for (int k = 1; k <= q - 2; ++k) v -= zeta_int(k + 1) * zeta_int(q - k) / 2;
        return v;
    }
    if (p == q) {
        Real z = zeta_int(p);
        return (z * z + zeta_int(2 * p)) / 2;
    }
    throw NoClosedForm("no closed form for even weight with p != 1 and p != q");
}

Real sigma_h_closed(int p, int q) { return linear_sum_closed(p, q) - zeta_int(p + q); }

Real georghiou_philippou(int n) {
    if (n < 1) throw DomainError("georghiou_philippou: n >= 1 required");
    Real v = zeta_int(2) * zeta_int(2 * n + 1) - Real((n + 2) * (2 * n + 1)) / 2 * zeta_int(2 * n + 3);
    for (int j = 2; j <= n + 1; ++j) v += 2 * Real(j - 1) * zeta_int(2 * j - 1) * zeta_int(2 * n + 4 - 2 * j);
    return v;
}

Real mu_closed(int q) {
    Real l2 = constants::log2();
    if (q == 0) return (zeta_int(2) - l2 * l2) / 2;
    if (q == 1)
        return Real(11) / 4 * zeta_int(4) + zeta_int(2) * l2 * l2 / 2 - pow(l2, 4) / 12 -
               Real(7) / 4 * zeta_int(3) * l2 - 2 * polylog(4, Real(1) / 2);
    throw NoClosedForm("mu_q closed form is only available for q = 0, 1");
}

Real sitaramachandrarao(int q) {
    if (q < 2) throw DomainError("sitaramachandrarao: q >= 2 required");
    Real v = 2 * zeta_int(q) * constants::log2() - q * zeta_int(q + 1) + 2 * zeta_alt_int(q + 1);
    for (int k = 1; k <= q; ++k) v += zeta_alt_int(k) * zeta_alt_int(q - k + 1);
    return v / 2;
}

SeriesResult alternating_mu(int q, const PrecisionContext& ctx) {
    if (q < 0) throw DomainError("alternating_mu: q >= 0 required");
    return weighted_sum(EulerSumSpec({{1, 1}}, 2 * q + 1, Real(1), true), ctx);
}

SeriesResult alt_inner_binomial(int q, const Real& t, const PrecisionContext& ctx) {
    if (q < 2) throw DomainError("alt_inner_binomial: q >= 2 required");
    if (!(t > 0 && t <= 1)) throw DomainError("alt_inner_binomial: 0 < t <= 1 required");
    // inner sums tend to log(1+t); the series of remainders r_n / n^q is
    // geometric for t < 1 and alternating for t = 1
    SeriesResult r;
    if (t < 1) {
        PrecisionScope scope(ctx.digits + 10);
        Real L = log(1 + t), tv = t, tn = 1, A = 0;
        r = sum_series(
            [&](std::size_t n) {
                tn *= tv;
                Real step = tn / Real(n);
                A += (n & 1) ? step : Real(-step);
                return (L - A) * pow(Real(n), -q);
            },
            ctx, 1);
        r.value = zeta_int(q) * L - r.value;
        return r;
    }
    double n_est = (ctx.digits + 5) / std::log10(2.0) + 10;
    PrecisionScope scope(ctx.digits + static_cast<int>(0.31 * n_est) + 10);
    Real L = constants::log2(), A = 0;
    std::vector<Real> a;
    r = euler_transform_sum(
        [&](std::size_t k) {
            while (a.size() <= k) {
                long n = static_cast<long>(a.size()) + 1;
                A += (n & 1) ? Real(1) / n : Real(-1) / n;
                Real c = (n & 1) ? Real(A - L) : Real(L - A);  // |log 2 - A_n|
                a.push_back(c * pow(Real(n), -q));
            }
            return a[k];
        },
        ctx);
    r.value = zeta_int(q) * L + r.value;
    return r;
}

namespace {

const std::map<std::string, std::function<Real()>>& catalog() {
    static const std::map<std::string, std::function<Real()>> values = [] {
        std::map<std::string, std::function<Real()>> m;
        auto z = [](int k) { return zeta_int(k); };
        auto l2 = [] { return constants::log2(); };
        auto li = [](int n, const Real& x) { return polylog(n, x); };
        m["3.7"] = [=] { return 2 * l2(); };
        m["3.47"] = [=] { return Real(7) / 8 * z(3); };
        m["3.48"] = [=] { return Real(7) / 4 * z(3); };
        m["3.49"] = [=] { return Real(5) / 4 * z(3); };
        m["3.53"] = [=] { return Real(5) / 8 * z(3); };
        m["3.76"] = [=] { return l2() * l2() + z(2); };
        m["3.77"] = [=] { return z(2) - l2() * l2(); };
        m["3.81"] = [=] { return z(3) - constants::pi() * constants::pi() / 12 * l2(); };
        m["3.105e"] = [=] { return 2 * z(3); };
        m["3.105g"] = [=] { return z(3) - z(2) * l2() / 2; };
        m["3.106b"] = [=] {
            Real l = l2();
            return li(3, Real(1) / 2) - z(3) / 4 + z(2) * l / 2 - l * l * l / 6;
        };
        m["3.106c"] = [=] {
            Real l = l2();
            return -li(3, Real(1) / 2) + Real(7) / 4 * z(3) - z(2) * l / 2 + l * l * l / 6;
        };
        m["3.108c"] = [] { return Real(0); };
        m["3.108d"] = [=] { return Real(5) / 4 * z(4); };
        m["3.110d"] = [=] { return Real(17) / 4 * z(4); };
        m["3.110h"] = [=] { return 4 * z(5); };
        m["3.110k"] = [=] { return -Real(9) / 2 * z(5) + 3 * z(2) * z(3); };
        m["3.110l"] = [=] { return Real(11) / 2 * z(5) - 2 * z(2) * z(3); };
        m["3.110m"] = [=] { return z(5) + z(2) * z(3); };
        m["3.128"] = [=] { return Real(3) / 2 * z(2) * l2() - z(3) / 4; };
        m["3.128c"] = [=] { return Real(7) / 4 * z(3) * l2() - z(2) * z(2) / 8; };
        m["3.135"] = [=] { return Real(3) / 2 * z(2) * l2() - z(3) / 4; };
        m["3.138"] = [=] { return -Real(5) / 8 * z(3); };
        m["3.140"] = [=] { return z(3); };
        m["3.211bi"] = [=] {
            Real l = l2();
            return z(4) / 16 + z(3) * l / 4 - z(2) * l * l / 4 + pow(l, 4) / 24 + li(4, Real(1) / 2);
        };
        m["3.215b"] = [=] { return Real(37) / 16 * z(4); };
        m["3.216"] = [] { return mu_closed(1); };
        m["3.216a"] = [=] {
            Real l = l2();
            return -Real(51) / 16 * z(4) - z(2) * l * l + pow(l, 4) / 6 + Real(7) / 2 * z(3) * l +
                   4 * li(4, Real(1) / 2);
        };
        m["3.220a"] = [] { return mu_closed(0); };
        m["3.220b"] = [] { return mu_closed(1); };
        m["3.240"] = [=] { return 4 * z(2) * z(3) - 7 * z(5); };
        m["3.240b"] = [=] { return Real(97) / 24 * z(6) - 2 * z(3) * z(3); };
        m["3.240b-as-printed"] = [=] { return -2 * z(3) * z(3) - Real(97) / 24 * z(6); };
        m["3.240d"] = [=] { return -36 * z(7) + 18 * z(2) * z(5) + Real(9) / 2 * z(3) * z(4); };
        m["3.247"] = [=] { return Real(5) / 2 * z(4); };
        m["3.262"] = [=] { return 7 * z(5) - 2 * z(2) * z(3); };
        m["3.263"] = [=] { return z(2) * z(3) + Real(15) / 2 * z(5); };
        m["3.264"] = [=] { return -z(2) * z(3) + Real(7) / 2 * z(5); };
        m["3.265"] = [=] { return -z(2) * z(3) + 3 * z(5); };
        m["3.266"] = [=] { return -z(2) * z(3) + Real(7) / 2 * z(5); };
        return m;
    }();
    return values;
}

}  // namespace

Real known_value(const std::string& key) {
    auto it = catalog().find(key);
    if (it == catalog().end()) throw DomainError("unknown closed-form key: " + key);
    Real v;
    {
        PrecisionScope scope(current_digits() + 5);
        v = it->second();
    }
    return rounded(v);
}

std::vector<std::string> known_value_keys() {
    std::vector<std::string> keys;
    for (auto& [k, v] : catalog()) keys.push_back(k);
    return keys;
}

}  // namespace zetakit
