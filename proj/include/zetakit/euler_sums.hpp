#pragma once

#include "zetakit/asymptotic.hpp"
#include "zetakit/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zetakit {

// sum_{n>=1} sign(n) prod_r (H_n^(r))^e x^n / n^q
// sign(n) = (-1)^(n+1) when alternating; H_{n-1} replaces H_n when shifted.
struct EulerSumSpec {
    std::vector<std::pair<int, int>> monomial;  // (order r, exponent e)
    int q = 2;
    Real x = 1;
    bool alternating = false;
    bool shifted = false;

    EulerSumSpec() = default;
    EulerSumSpec(std::vector<std::pair<int, int>> mono, int q_, Real x_ = 1, bool alt = false, bool shift = false);

    void validate() const;
    int weight() const;  // sum r*e + q
};

// |x| < 1 by direct summation, x = +-1 through the asymptotic tail or the
// Euler transform.
SeriesResult weighted_sum(const EulerSumSpec& spec, const PrecisionContext& ctx);

// Same for a polynomial in the harmonic numbers.
SeriesResult polynomial_sum(const HarmonicPolynomial& poly, int q, const Real& x, bool alternating,
                            const PrecisionContext& ctx);

// sum_{n>=1} H_n^(p) / n^q
SeriesResult sum_at_one(int p, int q, const PrecisionContext& ctx);

// Closed forms at the current default precision.
Real sigma_h_closed(int p, int q);       // sum H_{n-1}^(p) / n^q
Real linear_sum_closed(int p, int q);    // sum H_n^(p) / n^q
Real georghiou_philippou(int n);         // sum H_k^(2) / k^(2n+1)
Real mu_closed(int q);                   // q = 0, 1
Real sitaramachandrarao(int q);          // sum_n n^-q sum_{k<=n} (-1)^(k+1)/k

// mu_q = sum (-1)^(n+1) H_n / n^(2q+1)
SeriesResult alternating_mu(int q, const PrecisionContext& ctx);

// sum_n n^-q sum_{k<=n} (-1)^(k+1) t^k / k, 0 < t <= 1
SeriesResult alt_inner_binomial(int q, const Real& t, const PrecisionContext& ctx);

Real known_value(const std::string& key);
std::vector<std::string> known_value_keys();

}  // namespace zetakit
