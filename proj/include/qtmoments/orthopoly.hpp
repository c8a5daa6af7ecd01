#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtmoments/fock.hpp"
#include "qtmoments/ring.hpp"

namespace qtmoments {

class InsufficientMoments : public Error {
public:
    using Error::Error;
};

/// Jacobi parameters of a monic three-term recurrence
///   P_{n+1} = (x - alpha_n) P_n - omega_n P_{n-1}.
/// alpha is defined for n >= 0 and omega for n >= 1.
struct JacobiParams {
    std::string name;
    std::function<Polynomial(int)> alpha;
    std::function<Polynomial(int)> omega;
};

/// alpha_n = lambda + [n], omega_n = lambda [n].
JacobiParams charlier_strict();
/// alpha_n = lambda t^n + [n], omega_n = lambda [n]; the moments of the
/// lambda t^N scalar gauge.
JacobiParams charlier_tgauge();
/// alpha_n = lambda + [n]_q, omega_n = lambda [n]_q with [n]_q = 1 + q + ... + q^{n-1}.
JacobiParams q_charlier();
/// alpha_n = m p + (1 - 2p)[n], omega_n = [n](m - [n-1]) p (1 - p), unclamped.
JacobiParams binomial(const Polynomial& m, const Polynomial& p);
/// alpha_n = [n], omega_n = [n].
JacobiParams ejsmont();

/// The Charlier preset whose moments match a scalar gauge.
JacobiParams charlier_for(ScalarGauge gauge);

/// Jacobi data at a rational point; omega[0] is unused and kept zero.
struct RationalJacobi {
    std::vector<Rational> alpha;
    std::vector<Rational> omega;
};

/// alpha_0..alpha_{count-1} and omega_1..omega_{count-1} evaluated at `at`.
RationalJacobi specialize(const JacobiParams& j, const Assignment& at, int count);

/// Binomial data at rational (q, t) with omega_n clamped to zero whenever
/// [n-1]_{q,t} >= m.
RationalJacobi binomial_specialized(long m, const Rational& p, const Rational& q, const Rational& t, int count);

struct OrthoPolySequence {
    JacobiParams params;
    std::vector<Polynomial> polys;  // polys[k] is monic of degree k in x
};

OrthoPolySequence three_term_polys(const JacobiParams& j, int n_max);

/// Moments m_0..m_{n_max}: weighted Motzkin paths with level steps alpha_h,
/// up steps 1 and down steps (h -> h-1) omega_h. alpha and omega must cover
/// heights 0..n_max/2.
template <class R>
std::vector<R> motzkin_moments(const std::vector<R>& alpha, const std::vector<R>& omega, int n_max)
{
    const int top = n_max / 2;
    if (static_cast<int>(alpha.size()) <= top || (top > 0 && static_cast<int>(omega.size()) <= top)) {
        throw Error("Jacobi data too short for the requested moment order");
    }
    std::vector<R> out{R(1)};
    std::vector<R> cur(top + 1, R(0));
    cur[0] = R(1);
    for (int step = 1; step <= n_max; ++step) {
        std::vector<R> next(top + 1, R(0));
        for (int h = 0; h <= top; ++h) {
            R v = cur[h] * alpha[h];
            if (h > 0) v += cur[h - 1];
            if (h < top) v += cur[h + 1] * omega[h + 1];
            next[h] = v;
        }
        cur = std::move(next);
        out.push_back(cur[0]);
    }
    return out;
}

/// Power-series coefficients z^0..z^order of
///   1/(1 - b_0 z - lam_1 z^2/(1 - b_1 z - lam_2 z^2/(...)))
/// truncated after b[depth]; b.size() == lam.size() + 1 and lam[i] holds lam_{i+1}.
template <class R>
std::vector<R> jfraction_coefficients(const std::vector<R>& b, const std::vector<R>& lam, int order)
{
    if (b.empty() || b.size() != lam.size() + 1) throw Error("malformed continued fraction data");
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    auto invert = [len](const std::vector<R>& d) {
        std::vector<R> g(len, R(0));
        g[0] = R(1);
        for (std::size_t k = 1; k < len; ++k) {
            R acc(0);
            for (std::size_t i = 1; i <= k && i < d.size(); ++i) acc -= d[i] * g[k - i];
            g[k] = acc;
        }
        return g;
    };
    std::vector<R> tail;  // F_{h+1}; empty means absent
    for (std::size_t h = b.size(); h-- > 0;) {
        std::vector<R> d(len, R(0));
        d[0] = R(1);
        if (len > 1) d[1] = -b[h];
        if (!tail.empty()) {
            for (std::size_t k = 2; k < len; ++k) d[k] -= lam[h] * tail[k - 2];
        }
        tail = invert(d);
    }
    return tail;
}

Polynomial moment_by_motzkin(const JacobiParams& j, int n);
std::vector<Polynomial> motzkin_moment_sequence(const JacobiParams& j, int n_max);
std::vector<Rational> motzkin_moment_sequence(const RationalJacobi& j, int n_max);

/// Linear functional x^k -> moments[k]; throws InsufficientMoments.
Polynomial moment_functional(const Polynomial& p, const std::vector<Polynomial>& moments);

/// L(P_n P_m) = delta_{nm} prod_{i <= n} omega_i for all n, m <= n_max.
CheckReport check_orthogonality(const JacobiParams& j, int n_max, const std::vector<Polynomial>& moments);

/// C_n(p) f_0 = lambda^n f_n for n <= n_max, symbolically and at rational samples.
CheckReport check_charlier_fock_identity(int n_max);

/// J-fraction series of the Jacobi data, depth order/2 + 1.
std::vector<Polynomial> jfraction_series(const JacobiParams& j, int order);

/// Hankel determinants det[m_{i+j}]_{0 <= i,j <= k} are positive for k <= k_max.
CheckReport check_hankel_positivity(const JacobiParams& j, const Assignment& at, int k_max);

struct PoissonLimitResult {
    CheckReport report;
    std::vector<long> m_values;
    /// deviation[n-1][i] = |binomial m_n - Charlier m_n| at m_values[i].
    std::vector<std::vector<Rational>> deviation;
};

/// Symbolic limits of the binomial Jacobi data under p = lambda/m, m -> infinity,
/// plus exact moment deviations from the Charlier moments for n = 1..n.
PoissonLimitResult poisson_limit_check(int n, const Rational& lambda, const std::vector<long>& m_values,
                                       const Rational& q, const Rational& t);

}  // namespace qtmoments
