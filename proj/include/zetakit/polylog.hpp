#pragma once

#include "zetakit/numeric.hpp"

namespace zetakit {

// Li_s(x) = sum x^k / k^s summed directly. x = 1 and x = -1 go to the
// zeta engine; s = 0, -1 and 1 use their elementary closed forms.
SeriesResult li_direct(const Real& s, const Real& x, const PrecisionContext& ctx);

// Li_s(x) = 1/2 sum_n 2^-n sum_{k=1}^n C(n,k) x^k / k^s, -1 <= x <= 1.
SeriesResult li_binomial(const Real& s, const Real& x, const PrecisionContext& ctx);

// sum_n t^n sum_{k=1}^n C(n,k) x^k / k^s, equal to Li_s(xt/(1-t)) / (1-t).
SeriesResult binomial_transform(const Real& s, const Real& t, const Real& x, const PrecisionContext& ctx);

// sum_n t^n sum_{k=1}^n C(n,k) x^k / (k+y)^s, equal to
// xt/(1-t)^2 * Phi(xt/(1-t), s, y+1).
SeriesResult lerch_binomial_transform(const Real& s, const Real& t, const Real& x, const Real& y,
                                      const PrecisionContext& ctx);

// Phi(z,s,u) = sum_{n>=0} z^n / (n+u)^s
SeriesResult lerch_phi(const Real& z, const Real& s, const Real& u, const PrecisionContext& ctx);
// Phi through the t = 1/2 binomial transform above; needs u >= 1.
SeriesResult lerch_phi_binomial(const Real& z, const Real& s, const Real& u, const PrecisionContext& ctx);

// Li_n(x) for integer n >= 1 and any real x at the current default precision.
// For x > 1 the real part is returned.
Real polylog(int n, const Real& x);

}  // namespace zetakit
