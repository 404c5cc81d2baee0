#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetakit {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Rational = mp::mpq_rational;
using Integer = mp::mpz_int;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoClosedForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionContext {
    int digits = 40;
    double tolerance = 1e-35;
    std::size_t max_terms = 100000;

    PrecisionContext() = default;
    explicit PrecisionContext(int d, double tol = 0.0, std::size_t budget = 100000);

    // extra decimal digits for a binomial inner sum reaching index n_max
    int guard_digits(std::size_t n_max) const;
    PrecisionContext with_digits(int d) const;
};

// Sets the default mpfr precision for the lifetime of the scope. Every Real
// declared inside picks up that precision.
class PrecisionScope {
public:
    explicit PrecisionScope(int decimal_digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

int current_digits();

struct SeriesResult {
    Real value;
    Real error_estimate;
    std::size_t terms_used = 0;
    bool converged = false;
};

using TermFn = std::function<Real(std::size_t)>;

// Plain summation of term(first), term(first+1), ... with the three
// consecutive small terms stopping rule.
SeriesResult sum_series(const TermFn& term, const PrecisionContext& ctx, std::size_t first = 1);

// sum_{k>=0} (-1)^k a(k) through the Euler transform
//   sum_n (-1)^n Delta^n a(0) / 2^(n+1).
// a(k) should be smooth and of one sign; precision is the caller's business.
SeriesResult euler_transform_sum(const TermFn& a, const PrecisionContext& ctx);

// Levin u-transform on the partial sums of term(0), term(1), ...
// Stops once three successive estimates agree to the tolerance.
SeriesResult levin_sum(const TermFn& term, const PrecisionContext& ctx, std::size_t max_terms = 400);

// Estimate from the first terms.size() terms.
Real levin_u_estimate(const std::vector<Real>& terms);

// sum_{n>=n0} w(n) sum_{k=k0}^{n} C(n,k) lambda^(n-k) x^k f(k)
// with guard digits for the cancellation inside the inner sums.
struct BinomialSeries {
    TermFn outer;                   // w(n)
    TermFn inner;                   // f(k)
    Real lambda = 1;
    Real x = 1;
    std::size_t n0 = 0;
    std::size_t k0 = 0;
    double contraction = 0.5;       // expected |term ratio|, sizes the guard
    bool accelerate = false;        // Levin on the outer partial sums
};

SeriesResult binomial_double_series(const BinomialSeries& spec, const PrecisionContext& ctx);

Rational binomial(long n, long k);
Integer binomial_int(long n, long k);
Integer factorial(long n);
Rational rational_pow(const Rational& q, unsigned e);

Rational bernoulli_number(std::size_t n);
Real bernoulli_polynomial(std::size_t n, const Real& x);

Real to_real(const Rational& q);
Real to_real(const Integer& z);

namespace constants {
Real pi();
Real log2();
Real euler_gamma();
Real rho();
Real lambda_m();
}

// Round v to the current default precision.
Real rounded(const Real& v);

std::string format_real(const Real& v, int digits);
std::string format_rational(const Rational& q);

bool is_integer(const Real& v);

// Relative error with an absolute fallback when |ref| is below floor.
Real relative_error(const Real& value, const Real& ref, double floor);

}  // namespace zetakit
