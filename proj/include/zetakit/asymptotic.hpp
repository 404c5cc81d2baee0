#pragma once

#include "zetakit/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace zetakit {

// Finite sum of c * log(N)^e * N^(-p), truncated above max_power.
class LogPowerSeries {
public:
    explicit LogPowerSeries(int max_power) : max_power_(max_power) {}

    void add(int p, int e, const Real& c);
    LogPowerSeries operator+(const LogPowerSeries& o) const;
    LogPowerSeries operator*(const LogPowerSeries& o) const;
    LogPowerSeries scaled(const Real& c) const;
    LogPowerSeries shifted_power(int dp) const;  // multiply by N^(-dp)
    LogPowerSeries derivative() const;

    Real evaluate(const Real& n) const;
    int max_power() const { return max_power_; }
    const std::map<std::pair<int, int>, Real>& terms() const { return terms_; }

private:
    int max_power_;
    std::map<std::pair<int, int>, Real> terms_;  // (p, e) -> c
};

// Large-N expansion of H_N^(r) (or H_{N-1}^(r) when shifted), Bernoulli terms
// through B_{2*depth}.
LogPowerSeries harmonic_expansion(int r, int max_power, int depth, bool shifted = false);

// sum_{n>=M} g(n) by Euler-Maclaurin with Bernoulli terms through B_{2*depth}.
// Every power in g must exceed 1.
Real euler_maclaurin_tail(const LogPowerSeries& g, long M, int depth);

struct HarmonicMonomial {
    Rational coef;
    std::vector<std::pair<int, int>> factors;  // (order r, exponent e)
};
using HarmonicPolynomial = std::vector<HarmonicMonomial>;

struct TailPlan {
    long cutoff = 0;  // terms n < cutoff summed directly
    int depth = 0;    // Bernoulli depth
};

// Cutoff for a fixed depth so the first omitted Bernoulli term is below tol/10.
TailPlan tail_plan_for_depth(int depth, double tol);
// Depth and cutoff chosen automatically for the tolerance.
TailPlan tail_plan_auto(const PrecisionContext& ctx);

// sum_{n>=1} poly(H_n^(.)) / n^q with direct head and asymptotic tail.
SeriesResult harmonic_polynomial_sum(const HarmonicPolynomial& poly, int q, bool shifted,
                                     const PrecisionContext& ctx, const TailPlan& plan);
SeriesResult harmonic_polynomial_sum(const HarmonicPolynomial& poly, int q, bool shifted,
                                     const PrecisionContext& ctx);

}  // namespace zetakit
