#include "zetakit/combinatorics.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace zetakit {

HarmonicTable::HarmonicTable(std::size_t n_max, int r_max) : n_max_(n_max), r_max_(r_max) {
    values_.resize(r_max);
    for (int r = 1; r <= r_max; ++r) {
        auto& row = values_[r - 1];
        row.resize(n_max + 1);
        row[0] = 0;
        for (std::size_t n = 1; n <= n_max; ++n) {
            Integer p = 1;
            for (int i = 0; i < r; ++i) p *= n;
            row[n] = row[n - 1] + Rational(Integer(1), p);
        }
    }
}

const Rational& HarmonicTable::at(std::size_t n, int r) const {
    if (r < 1 || r > r_max_ || n > n_max_) throw DomainError("HarmonicTable: index out of range");
    return values_[r - 1][n];
}

namespace {
std::mutex harmonic_mutex;
std::map<int, std::vector<Rational>> harmonic_cache;
}  // namespace

Rational harmonic(std::size_t n, int r) {
    if (n < 1 || r < 1) throw DomainError("harmonic: need n >= 1, r >= 1");
    std::lock_guard<std::mutex> lock(harmonic_mutex);
    auto& row = harmonic_cache[r];
    if (row.empty()) row.push_back(Rational(0));
    while (row.size() <= n) {
        Integer p = 1;
        for (int i = 0; i < r; ++i) p *= row.size();
        row.push_back(row.back() + Rational(Integer(1), p));
    }
    return row[n];
}

namespace {
std::mutex stirling_mutex;
std::vector<std::vector<Integer>> stirling1_rows{{Integer(1)}};
}  // namespace

// s(n+1, m) = s(n, m-1) - n s(n, m)
Rational stirling_first(long n, long k) {
    if (n < 0 || k < 0) throw DomainError("stirling_first: negative index");
    if (k > n) return 0;
    std::lock_guard<std::mutex> lock(stirling_mutex);
    while (static_cast<long>(stirling1_rows.size()) <= n) {
        const auto& prev = stirling1_rows.back();
        long m = static_cast<long>(prev.size()) - 1;
        std::vector<Integer> row(m + 2, Integer(0));
        for (long j = 0; j <= m + 1; ++j) {
            Integer v = 0;
            if (j >= 1) v += prev[j - 1];
            if (j <= m) v -= Integer(m) * prev[j];
            row[j] = v;
        }
        stirling1_rows.push_back(std::move(row));
    }
    return Rational(stirling1_rows[n][k]);
}

// S(n,k) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^n
Rational stirling_second(long n, long k) {
    if (n < 0 || k < 0) throw DomainError("stirling_second: negative index");
    if (k > n) return 0;
    Integer s = 0;
    for (long j = 0; j <= k; ++j) {
        Integer t = binomial_int(k, j) * pow(Integer(j), static_cast<unsigned>(n));
        if ((k - j) & 1)
            s -= t;
        else
            s += t;
    }
    return Rational(s, factorial(k));
}

std::vector<WeightPartition> weight_partitions(int m) {
    if (m < 1) throw DomainError("weight_partitions: m >= 1");
    std::vector<WeightPartition> out;
    WeightPartition cur(m, 0);
    // fill m_1 first with the largest admissible count
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i > m) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int c = remaining / i; c >= 0; --c) {
            cur[i - 1] = c;
            rec(i + 1, remaining - c * i);
        }
        cur[i - 1] = 0;
    };
    rec(1, m);
    return out;
}

Rational flajolet_S_direct(long n, int m) {
    if (n < 1 || m < 1) throw DomainError("flajolet_S_direct: n, m >= 1");
    Rational s = 0;
    for (long k = 1; k <= n; ++k) {
        Integer den = pow(Integer(k), static_cast<unsigned>(m));
        Rational t(binomial_int(n, k), den);
        if (k & 1)
            s -= t;
        else
            s += t;
    }
    return s;
}

HarmonicPolynomial flajolet_polynomial(int m) {
    HarmonicPolynomial poly;
    for (auto& part : weight_partitions(m)) {
        HarmonicMonomial mono;
        mono.coef = 1;
        for (int i = 1; i <= m; ++i) {
            int mi = part[i - 1];
            if (mi == 0) continue;
            Integer den = factorial(mi) * pow(Integer(i), static_cast<unsigned>(mi));
            mono.coef /= Rational(den);
            mono.factors.emplace_back(i, mi);
        }
        poly.push_back(std::move(mono));
    }
    return poly;
}

Rational flajolet_S_partition(long n, int m) {
    if (n < 1 || m < 1) throw DomainError("flajolet_S_partition: n, m >= 1");
    Rational s = 0;
    for (auto& mono : flajolet_polynomial(m)) {
        Rational t = mono.coef;
        for (auto& [r, e] : mono.factors) t *= rational_pow(harmonic(n, r), static_cast<unsigned>(e));
        s += t;
    }
    return -s;
}

Rational alternating_binomial_inner(long n, int s, long shift) {
    if (s < 1 || shift < 1) throw DomainError("alternating_binomial_inner: s >= 1, shift >= 1");
    Integer L = 1;
    for (long j = shift; j <= n + shift; ++j) L = lcm(L, Integer(j));
    L = pow(L, static_cast<unsigned>(s));
    Integer num = 0;
    Integer c = 1;  // C(n,k)
    for (long k = 0; k <= n; ++k) {
        if (k > 0) c = c * (n - k + 1) / k;
        Integer t = c * (L / pow(Integer(k + shift), static_cast<unsigned>(s)));
        if (k & 1)
            num -= t;
        else
            num += t;
    }
    return Rational(num, L);
}

}  // namespace zetakit
