#pragma once

#include "zetakit/numeric.hpp"

namespace zetakit {

// alternating zeta (Dirichlet eta) by the 2^-(n+1) binomial series
SeriesResult zeta_alt_sondow(const Real& s, const PrecisionContext& ctx);

// exact values at non-positive integers
Rational zeta_alt_neg_int(int m);        // zeta_a(-m), terminating series
Rational zeta_neg_int(int m);            // zeta(-m) from Bernoulli numbers
Rational zeta_hasse_neg_int(int m);      // zeta(-m), terminating 1/(s-1) series

SeriesResult zeta_hasse(const Real& s, const PrecisionContext& ctx);
SeriesResult hurwitz_hasse(const Real& s, const Real& a, const PrecisionContext& ctx);
SeriesResult alt_hurwitz(const Real& s, const Real& u, const PrecisionContext& ctx);

// lambda-family for zeta_a; lambda = 1 is the Sondow series
SeriesResult zeta_alt_amore(const Real& s, const Real& lambda, const PrecisionContext& ctx);
// Partial sums of the lambda-series, one outer term at a time, handed to
// visit(n, partial) until it returns false or max_terms terms are used.
// Each partial is good to about 10^-digits absolutely.
void zeta_alt_amore_partials(const Real& s, const Real& lambda, const PrecisionContext& ctx,
                             const std::function<bool(std::size_t, const Real&)>& visit);

// zeta(s) = zeta_a-series / (1 - 2^(1-s))
SeriesResult zeta_amore_coffey(const Real& s, const Real& lambda, const PrecisionContext& ctx);

// zeta_a'(s) with lambda = s (default) or any lambda > 0
SeriesResult zeta_alt_derivative(const Real& s, const PrecisionContext& ctx);
SeriesResult zeta_alt_derivative(const Real& s, const Real& lambda, const PrecisionContext& ctx);

// zeta(2n) from Bernoulli numbers
Real zeta_even_bernoulli(int n);

// Cached values at the current default precision. zeta_int(1) throws;
// zeta_alt_int(1) = log 2.
Real zeta_int(int s);
Real zeta_alt_int(int s);

}  // namespace zetakit
