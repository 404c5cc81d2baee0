#include "zetakit/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace zetakit {

PrecisionContext::PrecisionContext(int d, double tol, std::size_t budget)
    : digits(d), tolerance(tol > 0 ? tol : std::pow(10.0, 5 - d)), max_terms(budget) {
    if (digits < 10) throw DomainError("digits must be >= 10");
    if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
    if (max_terms < 16) throw DomainError("max_terms must be >= 16");
}

int PrecisionContext::guard_digits(std::size_t n_max) const {
    return std::max<int>(10, static_cast<int>(n_max / 3));
}

PrecisionContext PrecisionContext::with_digits(int d) const {
    return PrecisionContext(d, 0.0, max_terms);
}

PrecisionScope::PrecisionScope(int decimal_digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(std::max(decimal_digits, 10)));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

int current_digits() { return static_cast<int>(Real::default_precision()); }

namespace {

Real epsilon_now() {
    Real e = 10;
    return pow(e, -current_digits());
}

bool small_term(const Real& term, const Real& partial, double tol) {
    Real scale = abs(partial);
    if (scale < 1) scale = 1;
    return abs(term) <= tol * scale;
}

void check_finite(const Real& t) {
    if (isnan(t)) throw std::runtime_error("NaN term in series");
}

}  // namespace

SeriesResult sum_series(const TermFn& term, const PrecisionContext& ctx, std::size_t first) {
    SeriesResult r;
    r.value = 0;
    Real absum = 0;
    Real last = 0;
    int small = 0;
    for (std::size_t i = 0; i < ctx.max_terms; ++i) {
        Real t = term(first + i);
        check_finite(t);
        r.value += t;
        absum += abs(t);
        last = t;
        r.terms_used = i + 1;
        if (small_term(t, r.value, ctx.tolerance)) {
            if (++small == 3) {
                r.converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    r.error_estimate = abs(last) + absum * epsilon_now();
    return r;
}

SeriesResult euler_transform_sum(const TermFn& a, const PrecisionContext& ctx) {
    SeriesResult r;
    r.value = 0;
    std::vector<Real> diag;
    Real half = Real(1) / 2;
    Real weight = half;
    Real last = 0;
    Real amax = 0;
    int small = 0;
    for (std::size_t n = 0; n < ctx.max_terms; ++n) {
        Real an = a(n);
        check_finite(an);
        if (abs(an) > amax) amax = abs(an);
        std::vector<Real> next(n + 1);
        next[0] = an;
        for (std::size_t j = 1; j <= n; ++j) next[j] = next[j - 1] - diag[j - 1];
        diag.swap(next);
        Real t = diag[n] * weight;
        if (n & 1) t = -t;
        r.value += t;
        weight *= half;
        last = t;
        r.terms_used = n + 1;
        if (small_term(t, r.value, ctx.tolerance)) {
            if (++small == 3) {
                r.converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    r.error_estimate = abs(last) + amax * epsilon_now() * Real(r.terms_used);
    return r;
}

Real levin_u_estimate(const std::vector<Real>& terms) {
    std::size_t k = terms.size() - 1;
    Real num = 0, den = 0, partial = 0;
    Real c = 1;  // C(k, j)
    Real logk = log(Real(1 + k));
    for (std::size_t j = 0; j <= k; ++j) {
        partial += terms[j];
        if (j > 0) c = c * Real(k - j + 1) / Real(j);
        if (terms[j] == 0) continue;
        Real scale = exp(Real(static_cast<long>(k) - 1) * (log(Real(1 + j)) - logk));
        Real w = c * scale / (Real(1 + j) * terms[j]);
        if (j & 1) w = -w;
        num += w * partial;
        den += w;
    }
    return num / den;
}

SeriesResult levin_sum(const TermFn& term, const PrecisionContext& ctx, std::size_t max_terms) {
    SeriesResult r;
    std::vector<Real> terms;
    std::vector<Real> est;
    max_terms = std::min(max_terms, ctx.max_terms);
    // the binomial weights cost about 0.3 decimal digits per term
    double spare = current_digits() - ctx.digits;
    int agree = 0;
    Real worst = 0;
    Real best_d = -1, best = 0;
    for (std::size_t n = 0; n < max_terms; ++n) {
        if (n > 8 && 0.35 * static_cast<double>(n) > spare) break;
        Real t = term(n);
        check_finite(t);
        terms.push_back(t);
        r.terms_used = n + 1;
        if (terms.size() < 4) continue;
        est.push_back(levin_u_estimate(terms));
        if (est.size() < 2) continue;
        Real d = abs(est.back() - est[est.size() - 2]);
        if (best_d < 0 || d < best_d) {
            best_d = d;
            best = est.back();
        }
        if (small_term(d, est.back(), ctx.tolerance)) {
            worst = std::max(worst, d);
            if (++agree == 3) {
                r.converged = true;
                break;
            }
        } else {
            agree = 0;
            worst = d;
        }
    }
    if (est.size() < 2) {
        r.value = 0;
        for (auto& t : terms) r.value += t;
        r.error_estimate = terms.empty() ? Real(0) : abs(terms.back());
        return r;
    }
    if (r.converged) {
        r.value = est.back();
        r.error_estimate = worst + abs(r.value) * epsilon_now();
    } else {
        r.value = best;
        r.error_estimate = best_d;
    }
    return r;
}

SeriesResult binomial_double_series(const BinomialSeries& spec, const PrecisionContext& ctx) {
    // inner terms grow like (|lambda|+|x|)^n while the sum itself grows
    // like |lambda+x|^n at best; the ratio is the cancellation per step
    double lam = spec.lambda.convert_to<double>(), xd = spec.x.convert_to<double>();
    double growth = std::log10(std::fabs(lam) + std::fabs(xd)) - std::log10(std::max(1.0, std::fabs(lam + xd)));
    growth = std::max(growth, 0.0);
    double contraction = std::clamp(spec.contraction, 1e-6, 0.999);
    double extra = spec.accelerate ? ctx.digits + 10 : 0;
    std::size_t n_est = spec.accelerate
                            ? 200
                            : static_cast<std::size_t>((ctx.digits + 5) / -std::log10(contraction)) + 10;
    int guard = std::max(10, static_cast<int>(std::ceil(growth * static_cast<double>(n_est))) + 5);

    SeriesResult out;
    for (int attempt = 0; attempt < 4; ++attempt) {
        PrecisionScope scope(ctx.digits + guard + static_cast<int>(extra));
        Real eps = epsilon_now();
        Real lambda = spec.lambda, x = spec.x;
        std::vector<Real> fk;
        std::vector<Real> row{Real(1)};
        Real rounding = 0;
        std::size_t n = 0;

        auto outer_term = [&](std::size_t idx) -> Real {
            // advance the binomial row to idx
            while (n < idx) {
                row.push_back(Real(0));
                for (std::size_t k = row.size() - 1; k > 0; --k) row[k] = lambda * row[k] + x * row[k - 1];
                row[0] = lambda * row[0];
                ++n;
            }
            while (fk.size() <= idx) fk.push_back(fk.size() >= spec.k0 ? spec.inner(fk.size()) : Real(0));
            Real inner = 0, mag = 0;
            for (std::size_t k = spec.k0; k <= idx; ++k) {
                Real t = row[k] * fk[k];
                inner += t;
                mag += abs(t);
            }
            Real w = spec.outer(idx);
            rounding += abs(w) * mag * eps * Real(idx + 2);
            return w * inner;
        };

        if (spec.accelerate) {
            out = levin_sum([&](std::size_t j) { return outer_term(spec.n0 + j); }, ctx, 400);
        } else {
            out = sum_series(outer_term, ctx, spec.n0);
        }
        out.error_estimate += rounding;
        Real scale = abs(out.value);
        if (scale < 1) scale = 1;
        if (rounding <= ctx.tolerance * scale / 10 || !out.converged) return out;
        guard *= 2;
    }
    return out;
}

Integer binomial_int(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial: n must be >= 0");
    return Rational(binomial_int(n, k));
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.backend().data(), static_cast<unsigned long>(n));
    return r;
}

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};
}  // namespace

Rational rational_pow(const Rational& q, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

Rational bernoulli_number(std::size_t n) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    while (bernoulli_cache.size() <= n) {
        std::size_t m = bernoulli_cache.size();
        if (m > 1 && (m & 1)) {
            bernoulli_cache.push_back(Rational(0));
            continue;
        }
        Rational s = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (k > 1 && (k & 1)) continue;
            s += Rational(binomial_int(m + 1, k)) * bernoulli_cache[k];
        }
        bernoulli_cache.push_back(-s / Rational(m + 1));
    }
    return bernoulli_cache[n];
}

Real bernoulli_polynomial(std::size_t n, const Real& x) {
    Real sum = 0;
    Real xp = 1;
    // Horner-free: accumulate from the top power down
    for (std::size_t k = n + 1; k-- > 0;) {
        sum += to_real(binomial(n, k) * bernoulli_number(k)) * xp;
        xp *= x;
    }
    return sum;
}

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const Integer& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
    return r;
}

namespace constants {

Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real log2() {
    Real r;
    mpfr_const_log2(r.backend().data(), MPFR_RNDN);
    return r;
}

Real euler_gamma() {
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

Real rho() { return (sqrt(Real(5)) - 1) / 2; }

Real lambda_m() { return Real("0.449408149787716779307327177571409"); }

}  // namespace constants

Real rounded(const Real& v) { return Real(v, Real::default_precision()); }

std::string format_real(const Real& v, int digits) {
    if (v == 0) return "0";
    return v.str(digits);
}

std::string format_rational(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

bool is_integer(const Real& v) { return isfinite(v) && floor(v) == v; }

Real relative_error(const Real& value, const Real& ref, double floor_) {
    Real d = abs(value - ref);
    if (abs(ref) < floor_) return d;
    return d / abs(ref);
}

}  // namespace zetakit
