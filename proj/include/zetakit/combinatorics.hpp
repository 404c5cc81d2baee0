#pragma once

#include "zetakit/asymptotic.hpp"
#include "zetakit/numeric.hpp"

#include <vector>

namespace zetakit {

// Exact H_n^(r) for 1 <= n <= n_max, 1 <= r <= r_max.
class HarmonicTable {
public:
    HarmonicTable(std::size_t n_max, int r_max);
    const Rational& at(std::size_t n, int r) const;
    std::size_t n_max() const { return n_max_; }
    int r_max() const { return r_max_; }

private:
    std::size_t n_max_;
    int r_max_;
    std::vector<std::vector<Rational>> values_;  // [r-1][n], n = 0 holds 0
};

Rational harmonic(std::size_t n, int r = 1);

Rational stirling_first(long n, long k);
Rational stirling_second(long n, long k);

// multiplicities (m_1, ..., m_m) with sum_i i*m_i = m, descending lexicographic
using WeightPartition = std::vector<int>;
std::vector<WeightPartition> weight_partitions(int m);

// sum_{k=1}^{n} C(n,k) (-1)^k / k^m
Rational flajolet_S_direct(long n, int m);
// same value assembled from the harmonic-number partition sum
Rational flajolet_S_partition(long n, int m);

// -S_n(m) as a polynomial in H_n^(i)
HarmonicPolynomial flajolet_polynomial(int m);

// sum_{k=0}^{n} C(n,k) (-1)^k (k+shift)^(-s) exact, s >= 1, shift >= 1
Rational alternating_binomial_inner(long n, int s, long shift = 1);

}  // namespace zetakit
