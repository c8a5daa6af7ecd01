#include "qtmoments/orthopoly.hpp"

#include <map>

#include "qtmoments/linalg.hpp"
#include "qtmoments/qtnum.hpp"

namespace qtmoments {

namespace {

const Polynomial& lambda_poly()
{
    static const Polynomial l = Polynomial::variable(Var::Lambda);
    return l;
}

Polynomial q_number(int n)
{
    Polynomial p;
    for (int k = 0; k < n; ++k) p += Polynomial::variable(Var::Q, static_cast<unsigned>(k));
    return p;
}

}  // namespace

JacobiParams charlier_strict()
{
    return {"charlier-strict",
            [](int n) { return lambda_poly() + qt_number(static_cast<unsigned>(n)); },
            [](int n) { return lambda_poly() * qt_number(static_cast<unsigned>(n)); }};
}

JacobiParams charlier_tgauge()
{
    return {"charlier-tgauge",
            [](int n) {
                return lambda_poly() * Polynomial::variable(Var::T, static_cast<unsigned>(n)) +
                       qt_number(static_cast<unsigned>(n));
            },
            [](int n) { return lambda_poly() * qt_number(static_cast<unsigned>(n)); }};
}

JacobiParams q_charlier()
{
    return {"q-charlier", [](int n) { return lambda_poly() + q_number(n); },
            [](int n) { return lambda_poly() * q_number(n); }};
}

JacobiParams binomial(const Polynomial& m, const Polynomial& p)
{
    return {"binomial",
            [m, p](int n) { return m * p + (Polynomial(1) - Polynomial(2) * p) * qt_number(static_cast<unsigned>(n)); },
            [m, p](int n) {
                return qt_number(static_cast<unsigned>(n)) * (m - qt_number(static_cast<unsigned>(n - 1))) * p *
                       (Polynomial(1) - p);
            }};
}

JacobiParams ejsmont()
{
    return {"ejsmont", [](int n) { return qt_number(static_cast<unsigned>(n)); },
            [](int n) { return qt_number(static_cast<unsigned>(n)); }};
}

JacobiParams charlier_for(ScalarGauge gauge)
{
    return gauge == ScalarGauge::Identity ? charlier_strict() : charlier_tgauge();
}

RationalJacobi specialize(const JacobiParams& j, const Assignment& at, int count)
{
    RationalJacobi r;
    r.omega.push_back(0);
    for (int n = 0; n < count; ++n) {
        r.alpha.push_back(j.alpha(n).evaluate(at));
        if (n >= 1) r.omega.push_back(j.omega(n).evaluate(at));
    }
    return r;
}

RationalJacobi binomial_specialized(long m, const Rational& p, const Rational& q, const Rational& t, int count)
{
    const Assignment at{{Var::Q, q}, {Var::T, t}};
    RationalJacobi r;
    r.omega.push_back(0);
    const Rational mr(m);
    for (int n = 0; n < count; ++n) {
        const Rational bracket = qt_number(static_cast<unsigned>(n)).evaluate(at);
        r.alpha.push_back(mr * p + (1 - 2 * p) * bracket);
        if (n >= 1) {
            const Rational previous = qt_number(static_cast<unsigned>(n - 1)).evaluate(at);
            Rational w = bracket * (mr - previous) * p * (1 - p);
            if (previous >= mr) w = 0;
            r.omega.push_back(w);
        }
    }
    return r;
}

OrthoPolySequence three_term_polys(const JacobiParams& j, int n_max)
{
    OrthoPolySequence seq{j, {}};
    if (n_max < 0) return seq;
    const Polynomial x = Polynomial::variable(Var::X);
    seq.polys.emplace_back(1);
    if (n_max >= 1) seq.polys.push_back(x - j.alpha(0));
    for (int n = 1; n < n_max; ++n) {
        seq.polys.push_back((x - j.alpha(n)) * seq.polys[n] - j.omega(n) * seq.polys[n - 1]);
    }
    return seq;
}

std::vector<Polynomial> motzkin_moment_sequence(const JacobiParams& j, int n_max)
{
    const int top = n_max / 2;
    std::vector<Polynomial> alpha, omega{Polynomial()};
    for (int h = 0; h <= top; ++h) {
        alpha.push_back(j.alpha(h));
        if (h >= 1) omega.push_back(j.omega(h));
    }
    return motzkin_moments(alpha, omega, n_max);
}

std::vector<Rational> motzkin_moment_sequence(const RationalJacobi& j, int n_max)
{
    return motzkin_moments(j.alpha, j.omega, n_max);
}

Polynomial moment_by_motzkin(const JacobiParams& j, int n)
{
    return motzkin_moment_sequence(j, n).back();
}

Polynomial moment_functional(const Polynomial& p, const std::vector<Polynomial>& moments)
{
    const unsigned deg = p.degree_in(Var::X);
    if (moments.size() <= deg) {
        throw InsufficientMoments("need moments up to order " + std::to_string(deg) + ", have " +
                                  std::to_string(moments.empty() ? 0 : moments.size() - 1));
    }
    Polynomial out;
    for (unsigned k = 0; k <= deg; ++k) {
        Polynomial c = p.coefficient_of(Var::X, k);
        if (!c.is_zero()) out += c * moments[k];
    }
    return out;
}

CheckReport check_orthogonality(const JacobiParams& j, int n_max, const std::vector<Polynomial>& moments)
{
    CheckReport report{"orthogonality of " + j.name};
    const auto seq = three_term_polys(j, n_max);
    Polynomial norm(1);
    std::vector<Polynomial> norms{norm};
    for (int n = 1; n <= n_max; ++n) {
        norm *= j.omega(n);
        norms.push_back(norm);
    }
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n_max; ++m) {
            ++report.checked;
            Polynomial got = moment_functional(seq.polys[n] * seq.polys[m], moments);
            Polynomial want = n == m ? norms[n] : Polynomial();
            if (got != want) {
                report.fail("(" + std::to_string(n) + "," + std::to_string(m) + "): " + got.to_string());
            }
        }
    }
    return report;
}

CheckReport check_charlier_fock_identity(int n_max)
{
    CheckReport report{"C_n(p) f_0 = lambda^n f_n"};
    const JacobiParams j = charlier_strict();
    const int dim = n_max + 1;
    const std::vector<Assignment> samples{
        {{Var::Q, Rational(1, 3)}, {Var::T, Rational(2, 3)}, {Var::Lambda, Rational(2)}},
        {{Var::Q, Rational(-1, 4)}, {Var::T, Rational(1, 2)}, {Var::Lambda, Rational(3, 2)}},
    };
    auto compare = [&](int n, const FockVector& v) {
        ++report.checked;
        FockVector want = FockVector::basis(dim, n);
        want *= Polynomial::variable(Var::Lambda, static_cast<unsigned>(n));
        if (v != want) {
            report.fail("n=" + std::to_string(n) + " symbolic mismatch");
            return;
        }
        for (const auto& at : samples) {
            const Rational lam = at.at(Var::Lambda);
            Rational power = 1;
            for (int i = 0; i < n; ++i) power *= lam;
            for (int k = 0; k <= dim; ++k) {
                Rational value = v[k].evaluate(at);
                Rational expected = k == n ? power : Rational(0);
                if (value != expected) report.fail("n=" + std::to_string(n) + " at sample, level " + std::to_string(k));
            }
        }
    };
    FockVector prev = FockVector::basis(dim, 0);
    compare(0, prev);
    if (n_max == 0) return report;
    FockVector cur = apply_poisson(prev, ScalarGauge::Identity);
    {
        FockVector shift = prev;
        shift *= j.alpha(0);
        cur -= shift;
    }
    compare(1, cur);
    for (int n = 1; n < n_max; ++n) {
        FockVector next = apply_poisson(cur, ScalarGauge::Identity);
        FockVector diag = cur;
        diag *= j.alpha(n);
        FockVector sub = prev;
        sub *= j.omega(n);
        next -= diag;
        next -= sub;
        prev = std::move(cur);
        cur = std::move(next);
        compare(n + 1, cur);
    }
    return report;
}

std::vector<Polynomial> jfraction_series(const JacobiParams& j, int order)
{
    if (order < 0) return {};
    const int depth = order / 2 + 1;
    std::vector<Polynomial> b, lam;
    for (int h = 0; h <= depth; ++h) {
        b.push_back(j.alpha(h));
        if (h >= 1) lam.push_back(j.omega(h));
    }
    return jfraction_coefficients(b, lam, order);
}

CheckReport check_hankel_positivity(const JacobiParams& j, const Assignment& at, int k_max)
{
    CheckReport report{"Hankel positivity of " + j.name};
    const auto moments = motzkin_moment_sequence(specialize(j, at, k_max + 2), 2 * k_max);
    RationalMatrix h(k_max + 1, std::vector<Rational>(k_max + 1));
    for (int r = 0; r <= k_max; ++r) {
        for (int c = 0; c <= k_max; ++c) h[r][c] = moments[r + c];
    }
    const auto minors = leading_principal_minors(h);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        ++report.checked;
        if (minors[k] <= 0) report.fail("k=" + std::to_string(k) + ": " + to_string(minors[k]));
    }
    return report;
}

namespace {

// Finite Laurent series in u = 1/m with polynomial coefficients.
class LaurentU {
public:
    LaurentU() = default;
    LaurentU(const Polynomial& c, int power = 0)
    {
        if (!c.is_zero()) coeffs_[power] = c;
    }

    LaurentU operator+(const LaurentU& o) const
    {
        LaurentU r = *this;
        for (const auto& [k, c] : o.coeffs_) r.add(k, c);
        return r;
    }
    LaurentU operator-(const LaurentU& o) const
    {
        LaurentU r = *this;
        for (const auto& [k, c] : o.coeffs_) r.add(k, -c);
        return r;
    }
    LaurentU operator*(const LaurentU& o) const
    {
        LaurentU r;
        for (const auto& [i, a] : coeffs_) {
            for (const auto& [k, b] : o.coeffs_) r.add(i + k, a * b);
        }
        return r;
    }

    int lowest_power() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    Polynomial coefficient(int power) const
    {
        auto it = coeffs_.find(power);
        return it == coeffs_.end() ? Polynomial() : it->second;
    }

private:
    void add(int k, const Polynomial& c)
    {
        Polynomial& slot = coeffs_[k];
        slot += c;
        if (slot.is_zero()) coeffs_.erase(k);
    }
    std::map<int, Polynomial> coeffs_;
};

}  // namespace

PoissonLimitResult poisson_limit_check(int n, const Rational& lambda, const std::vector<long>& m_values,
                                       const Rational& q, const Rational& t)
{
    PoissonLimitResult result;
    result.report.name = "Poisson limit of the binomial Jacobi data";
    result.m_values = m_values;
    CheckReport& report = result.report;

    // m = u^{-1}, p = lambda u.
    const LaurentU m(Polynomial(1), -1);
    const LaurentU p(lambda_poly(), 1);
    const LaurentU one(Polynomial(1));
    const JacobiParams limit = charlier_strict();
    for (int k = 0; k <= n; ++k) {
        const LaurentU bracket(qt_number(static_cast<unsigned>(k)));
        const LaurentU alpha = m * p + (one - LaurentU(Polynomial(2)) * p) * bracket;
        ++report.checked;
        if (alpha.lowest_power() < 0 || alpha.coefficient(0) != limit.alpha(k)) {
            report.fail("alpha_" + std::to_string(k) + " limit");
        }
        if (k >= 1) {
            const LaurentU previous(qt_number(static_cast<unsigned>(k - 1)));
            const LaurentU omega = bracket * (m - previous) * p * (one - p);
            ++report.checked;
            if (omega.lowest_power() < 0 || omega.coefficient(0) != limit.omega(k)) {
                report.fail("omega_" + std::to_string(k) + " limit");
            }
        }
    }

    const Assignment at{{Var::Q, q}, {Var::T, t}, {Var::Lambda, lambda}};
    const auto poisson = motzkin_moment_sequence(specialize(limit, at, n / 2 + 2), n);
    result.deviation.assign(n, std::vector<Rational>());
    for (long mv : m_values) {
        if (Rational(mv) <= lambda) {
            report.fail("m=" + std::to_string(mv) + " does not exceed lambda");
            continue;
        }
        const Rational pv = lambda / Rational(mv);
        const auto moments = motzkin_moment_sequence(binomial_specialized(mv, pv, q, t, n / 2 + 2), n);
        for (int k = 1; k <= n; ++k) result.deviation[k - 1].push_back(abs(moments[k] - poisson[k]));
    }
    if (!report.ok()) return result;
    for (int k = 1; k <= n; ++k) {
        const auto& dev = result.deviation[k - 1];
        ++report.checked;
        bool all_zero = true;
        for (const auto& d : dev) all_zero = all_zero && d == 0;
        if (all_zero) continue;
        for (std::size_t i = 1; i < dev.size(); ++i) {
            if (!(dev[i] < dev[i - 1])) {
                report.fail("n=" + std::to_string(k) + ": deviation does not decrease from m=" +
                            std::to_string(m_values[i - 1]) + " to m=" + std::to_string(m_values[i]));
            }
        }
        if (!dev.empty() && !(dev.back() < dev.front())) report.fail("n=" + std::to_string(k) + ": no improvement");
    }
    return result;
}

}  // namespace qtmoments
