#pragma once

#include "zetakit/numeric.hpp"

#include <functional>
#include <vector>

namespace zetakit {

// f(x, x - lower, upper - x). The two distances are exact even where x
// itself has rounded onto an endpoint, so log(1-x) and friends stay finite.
using Integrand = std::function<Real(const Real& x, const Real& from_lower, const Real& to_upper)>;

struct IntegralSpec {
    Integrand integrand;
    Real lower = 0;
    Real upper = 1;
    bool singular_lower = true;
    bool singular_upper = true;

    IntegralSpec() = default;
    IntegralSpec(Integrand f, Real a, Real b) : integrand(std::move(f)), lower(std::move(a)), upper(std::move(b)) {}
    static IntegralSpec plain(std::function<Real(const Real&)> f, Real a, Real b);
};

// tanh-sinh, doubling the node density per level up to 2^12 points
SeriesResult integrate(const IntegralSpec& spec, const PrecisionContext& ctx);

// int_0^(pi/2) x^n cot x dx, n in {1, 2}
SeriesResult cot_moment(int n, const PrecisionContext& ctx);

// zeta(2n+1) from the integral of B_{2n+1}(x) cot(pi x) over [0, 1/2]
SeriesResult zeta_odd_cot(int n, const PrecisionContext& ctx);

// B_{2n+1}(x) cot(pi x); below x = 1e-3 a series form avoids 0 * inf
Real bernoulli_cot_integrand(int n, const Real& x);

enum class Side { Cos, Sin };

struct PartialSums {
    std::vector<Real> sums;  // sums[N] for N = 0..N_max (sin side starts at 1; sums[0] = 0)
    Real target;
};

// Partial sums of sum_n 2^-n sum_k C(n,k) int_0^(pi/2) x^d trig(2kx) dx with
// the inner integrals in closed form. degree in 1..3.
PartialSums basic_identity_partial(int N, int degree, Side side);

}  // namespace zetakit
