#include "zetakit/asymptotic.hpp"

#include "zetakit/zeta.hpp"

#include <cmath>

namespace zetakit {

void LogPowerSeries::add(int p, int e, const Real& c) {
    if (p > max_power_ || c == 0) return;
    auto key = std::make_pair(p, e);
    auto it = terms_.find(key);
    if (it == terms_.end())
        terms_.emplace(key, c);
    else
        it->second += c;
}

LogPowerSeries LogPowerSeries::operator+(const LogPowerSeries& o) const {
    LogPowerSeries r(std::min(max_power_, o.max_power_));
    for (auto& [k, c] : terms_) r.add(k.first, k.second, c);
    for (auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
    return r;
}

LogPowerSeries LogPowerSeries::operator*(const LogPowerSeries& o) const {
    LogPowerSeries r(std::min(max_power_, o.max_power_));
    for (auto& [a, ca] : terms_)
        for (auto& [b, cb] : o.terms_) r.add(a.first + b.first, a.second + b.second, ca * cb);
    return r;
}

LogPowerSeries LogPowerSeries::scaled(const Real& c) const {
    LogPowerSeries r(max_power_);
    for (auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
    return r;
}

LogPowerSeries LogPowerSeries::shifted_power(int dp) const {
    LogPowerSeries r(max_power_ + dp);
    for (auto& [k, v] : terms_) r.add(k.first + dp, k.second, v);
    return r;
}

// d/dx [L^e x^-p] = e L^(e-1) x^(-p-1) - p L^e x^(-p-1)
LogPowerSeries LogPowerSeries::derivative() const {
    LogPowerSeries r(max_power_ + 1);
    for (auto& [k, v] : terms_) {
        auto [p, e] = k;
        if (e > 0) r.add(p + 1, e - 1, v * Real(e));
        if (p != 0) r.add(p + 1, e, -v * Real(p));
    }
    return r;
}

Real LogPowerSeries::evaluate(const Real& n) const {
    Real L = log(n);
    Real s = 0;
    for (auto& [k, v] : terms_) s += v * pow(L, k.second) * pow(n, -k.first);
    return s;
}

LogPowerSeries harmonic_expansion(int r, int max_power, int depth, bool shifted) {
    LogPowerSeries h(max_power);
    if (r == 1) {
        h.add(0, 1, Real(1));
        h.add(0, 0, constants::euler_gamma());
        h.add(1, 0, Real(1) / 2);
        for (int k = 1; k <= depth; ++k)
            h.add(2 * k, 0, -to_real(bernoulli_number(2 * k)) / Real(2 * k));
    } else {
        h.add(0, 0, zeta_int(r));
        h.add(r - 1, 0, Real(-1) / Real(r - 1));
        h.add(r, 0, Real(1) / 2);
        Rational rising = r;  // (r)_{2k-1}
        Rational fact = 2;    // (2k)!
        for (int k = 1; k <= depth; ++k) {
            if (k > 1) {
                rising *= Rational((r + 2 * k - 3) * (r + 2 * k - 2));
                fact *= Rational((2 * k - 1) * (2 * k));
            }
            h.add(r + 2 * k - 1, 0, -to_real(bernoulli_number(2 * k) * rising / fact));
        }
    }
    if (shifted) h.add(r, 0, Real(-1));
    return h;
}

Real euler_maclaurin_tail(const LogPowerSeries& g, long M, int depth) {
    Real m = M;
    Real L = log(m);
    Real integral = 0;
    for (auto& [k, c] : g.terms()) {
        auto [p, e] = k;
        if (p <= 1) throw DomainError("euler_maclaurin_tail: divergent term");
        // M^(1-p) sum_i e!/(e-i)! L^(e-i) / (p-1)^(i+1)
        Real inner = 0, ff = 1;
        for (int i = 0; i <= e; ++i) {
            if (i > 0) ff *= Real(e - i + 1);
            inner += ff * pow(L, e - i) / pow(Real(p - 1), i + 1);
        }
        integral += c * pow(m, 1 - p) * inner;
    }
    Real total = integral + g.evaluate(m) / 2;
    LogPowerSeries d = g.derivative();
    Rational fact = 2;
    for (int j = 1; j <= depth; ++j) {
        if (j > 1) {
            fact *= Rational((2 * j - 1) * (2 * j));
            d = d.derivative().derivative();
        }
        total -= to_real(bernoulli_number(2 * j) / fact) * d.evaluate(m);
    }
    return total;
}

TailPlan tail_plan_for_depth(int depth, double tol) {
    double b = std::fabs(bernoulli_number(2 * depth + 2).convert_to<double>()) / (2 * depth + 2);
    int k = 2 * depth + 2;
    long M = static_cast<long>(std::ceil(std::pow(b / (tol / 10), 1.0 / k)));
    return TailPlan{std::max(M, 10L), depth};
}

TailPlan tail_plan_auto(const PrecisionContext& ctx) {
    long M = std::max(30, ctx.digits);
    double target = ctx.tolerance / 1e5;
    int depth = 2;
    while (depth < 200) {
        double lb = std::log10(std::fabs(bernoulli_number(2 * depth + 2).convert_to<double>())) -
                    (2 * depth + 2) * std::log10(static_cast<double>(M));
        if (lb < std::log10(target)) break;
        ++depth;
    }
    return TailPlan{M, depth};
}

SeriesResult harmonic_polynomial_sum(const HarmonicPolynomial& poly, int q, bool shifted,
                                     const PrecisionContext& ctx, const TailPlan& plan) {
    if (q < 2) throw DomainError("harmonic sum at x=1 needs q >= 2");
    SeriesResult res;
    int max_r = 1;
    for (auto& m : poly)
        for (auto& f : m.factors) max_r = std::max(max_r, f.first);
    {
        PrecisionScope scope(ctx.digits + 15);
        int maxp = q + 2 * plan.depth + 2;
        std::vector<LogPowerSeries> hexp;
        for (int r = 1; r <= max_r; ++r) hexp.push_back(harmonic_expansion(r, maxp, plan.depth, shifted));
        LogPowerSeries total(maxp);
        for (auto& mono : poly) {
            LogPowerSeries t(maxp);
            t.add(0, 0, to_real(mono.coef));
            for (auto& [r, e] : mono.factors)
                for (int i = 0; i < e; ++i) t = t * hexp[r - 1];
            total = total + t;
        }
        LogPowerSeries g = total.shifted_power(q);
        Real tail = euler_maclaurin_tail(g, plan.cutoff, plan.depth);

        std::vector<Real> H(max_r + 1, Real(0));
        Real head = 0, absum = 0;
        for (long n = 1; n < plan.cutoff; ++n) {
            Real nn = n;
            std::vector<Real> Hprev = H;
            for (int r = 1; r <= max_r; ++r) H[r] += pow(nn, -r);
            const std::vector<Real>& use = shifted ? Hprev : H;
            Real val = 0;
            for (auto& mono : poly) {
                Real t = to_real(mono.coef);
                for (auto& [r, e] : mono.factors) t *= pow(use[r], e);
                val += t;
            }
            Real term = val * pow(nn, -q);
            head += term;
            absum += abs(term);
        }
        // first omitted Euler-Maclaurin correction
        LogPowerSeries d = g.derivative();
        for (int j = 0; j < plan.depth; ++j) d = d.derivative().derivative();
        Rational fact = 1;
        for (int i = 1; i <= 2 * plan.depth + 2; ++i) fact *= i;
        Real last = abs(to_real(bernoulli_number(2 * plan.depth + 2) / fact) * d.evaluate(Real(plan.cutoff)));

        res.value = head + tail;
        res.error_estimate = last + absum * pow(Real(10), -(ctx.digits + 12));
        res.terms_used = static_cast<std::size_t>(plan.cutoff - 1);
    }
    Real scale = abs(res.value);
    if (scale < 1) scale = 1;
    res.converged = res.error_estimate <= ctx.tolerance * scale;
    return res;
}

SeriesResult harmonic_polynomial_sum(const HarmonicPolynomial& poly, int q, bool shifted,
                                     const PrecisionContext& ctx) {
    return harmonic_polynomial_sum(poly, q, shifted, ctx, tail_plan_auto(ctx));
}

}  // namespace zetakit
