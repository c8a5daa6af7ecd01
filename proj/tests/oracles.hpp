#pragma once

// Slow, independent reference computations used to cross-check the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "qtmoments/ring.hpp"

namespace oracle {

using qtmoments::Integer;
using qtmoments::Monomial;
using qtmoments::Polynomial;
using qtmoments::Rational;
using qtmoments::Var;

inline Polynomial lambda() { return Polynomial::variable(Var::Lambda); }
inline Polynomial t() { return Polynomial::variable(Var::T); }
inline Polynomial q() { return Polynomial::variable(Var::Q); }

inline Polynomial mono(long c, unsigned lam, unsigned qe, unsigned te)
{
    Monomial m;
    m.set(Var::Lambda, lam);
    m.set(Var::Q, qe);
    m.set(Var::T, te);
    return Polynomial::term(c, m);
}

inline std::vector<Integer> bell_numbers(int n_max)
{
    // Bell triangle.
    std::vector<Integer> bell{1};
    std::vector<Integer> row{1};
    for (int n = 1; n <= n_max; ++n) {
        bell.push_back(row.back());
        std::vector<Integer> next{row.back()};
        for (const auto& v : row) next.push_back(next.back() + v);
        row = next;
    }
    return bell;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer catalan(long n) { return binomial(2 * n, n) / (n + 1); }

inline Integer narayana(long n, long k) { return binomial(n, k) * binomial(n, k - 1) / n; }

// Set partitions of {1..n} built by inserting n into an existing block or a new one.
inline std::vector<std::vector<std::vector<int>>> all_partitions(int n)
{
    std::vector<std::vector<std::vector<int>>> out{{}};
    for (int e = 1; e <= n; ++e) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& p : out) {
            for (std::size_t b = 0; b < p.size(); ++b) {
                auto copy = p;
                copy[b].push_back(e);
                next.push_back(copy);
            }
            auto copy = p;
            copy.push_back({e});
            next.push_back(copy);
        }
        out = std::move(next);
    }
    return out;
}

struct Stats {
    int crossings = 0;
    int nestings = 0;
    int covered_singletons = 0;
};

// Scans all quadruples a < b < c < d using the "next element of the same block" relation.
inline Stats brute_stats(int n, const std::vector<std::vector<int>>& blocks)
{
    std::vector<int> block_of(n + 1), succ(n + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto sorted = blocks[b];
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            block_of[sorted[i]] = static_cast<int>(b);
            if (i + 1 < sorted.size()) succ[sorted[i]] = sorted[i + 1];
        }
    }
    auto singleton = [&](int x) {
        return std::count(block_of.begin() + 1, block_of.end(), block_of[x]) == 1;
    };
    Stats s;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                for (int d = c + 1; d <= n; ++d) {
                    if (succ[a] == c && succ[b] == d) ++s.crossings;
                    if (succ[a] == d && succ[b] == c) ++s.nestings;
                }
            }
        }
    }
    for (int a = 1; a <= n; ++a) {
        if (succ[a] == 0) continue;
        for (int x = a + 1; x < succ[a]; ++x) {
            if (singleton(x)) ++s.covered_singletons;
        }
    }
    return s;
}

inline Polynomial brute_moment(int n, bool covered)
{
    Polynomial sum;
    for (const auto& p : all_partitions(n)) {
        Stats s = brute_stats(n, p);
        sum += mono(1, static_cast<unsigned>(p.size()), static_cast<unsigned>(s.crossings),
                    static_cast<unsigned>(s.nestings + (covered ? s.covered_singletons : 0)));
    }
    return sum;
}

inline int inversions(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    }
    return inv;
}

// sum over permutations of q^inv t^{n(n-1)/2 - inv} prod g[k][sigma(k)], by next_permutation.
inline Rational brute_inner(const std::vector<std::vector<Rational>>& g, const Rational& qv, const Rational& tv)
{
    const int n = static_cast<int>(g.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const int top = n * (n - 1) / 2;
    Rational total = 0;
    do {
        const int inv = inversions(perm);
        Rational term = 1;
        for (int i = 0; i < inv; ++i) term *= qv;
        for (int i = 0; i < top - inv; ++i) term *= tv;
        for (int k = 0; k < n; ++k) term *= g[k][perm[k]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Polynomial brute_inversion_sum(int n)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const int top = n * (n - 1) / 2;
    Polynomial total;
    do {
        const int inv = inversions(perm);
        total += mono(1, 0, static_cast<unsigned>(inv), static_cast<unsigned>(top - inv));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// m_n = (J^n)_{00} for the tridiagonal matrix with J[h][h] = alpha_h, J[h][h+1] = omega_{h+1}, J[h+1][h] = 1.
template <class R>
std::vector<R> matrix_power_moments(const std::vector<R>& alpha, const std::vector<R>& omega, int n_max)
{
    const int dim = static_cast<int>(alpha.size());
    std::vector<std::vector<R>> J(dim, std::vector<R>(dim, R(0)));
    for (int h = 0; h < dim; ++h) {
        J[h][h] = alpha[h];
        if (h + 1 < dim) {
            J[h][h + 1] = omega[h + 1];
            J[h + 1][h] = R(1);
        }
    }
    std::vector<std::vector<R>> P(dim, std::vector<R>(dim, R(0)));
    for (int h = 0; h < dim; ++h) P[h][h] = R(1);
    std::vector<R> out{R(1)};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::vector<R>> next(dim, std::vector<R>(dim, R(0)));
        for (int i = 0; i < dim; ++i) {
            for (int k = 0; k < dim; ++k) {
                if (P[i][k] == R(0)) continue;
                for (int j = 0; j < dim; ++j) {
                    if (J[k][j] == R(0)) continue;
                    next[i][j] += P[i][k] * J[k][j];
                }
            }
        }
        P = std::move(next);
        out.push_back(P[0][0]);
    }
    return out;
}

// Stirling numbers of the second kind by S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::vector<std::vector<Integer>> stirling2(int n_max)
{
    std::vector<std::vector<Integer>> s(n_max + 1, std::vector<Integer>(n_max + 1, 0));
    s[0][0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
    }
    return s;
}

}  // namespace oracle
