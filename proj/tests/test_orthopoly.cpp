#include "doctest.h"
#include "oracles.hpp"
#include "qtmoments/orthopoly.hpp"
#include "qtmoments/partitions.hpp"
#include "qtmoments/qtnum.hpp"

using namespace qtmoments;

namespace {

void jacobi_vectors(const JacobiParams& j, int count, std::vector<Polynomial>& alpha, std::vector<Polynomial>& omega)
{
    alpha.clear();
    omega.assign(1, Polynomial());
    for (int h = 0; h < count; ++h) alpha.push_back(j.alpha(h));
    for (int h = 1; h < count; ++h) omega.push_back(j.omega(h));
}

}  // namespace

TEST_CASE("preset coefficients")
{
    const Polynomial lam = oracle::lambda();
    CHECK(charlier_strict().alpha(0) == lam);
    CHECK(charlier_strict().alpha(2) == lam + qt_number(2));
    CHECK(charlier_strict().omega(3) == lam * qt_number(3));
    CHECK(charlier_tgauge().alpha(2) == lam * oracle::t().pow(2) + qt_number(2));
    CHECK(q_charlier().omega(3) == lam * parse_polynomial("1 + q + q^2"));
    CHECK(ejsmont().alpha(3) == qt_number(3));
    CHECK(ejsmont().omega(3) == qt_number(3));
    const JacobiParams b = binomial(Polynomial(5), lam);
    CHECK(b.alpha(0) == 5 * lam);
    CHECK(b.omega(2) == qt_number(2) * (5 - qt_number(1)) * lam * (1 - lam));
    CHECK(charlier_for(ScalarGauge::TPowerN).alpha(1) == charlier_tgauge().alpha(1));
}

TEST_CASE("printed Charlier polynomials")
{
    const auto seq = three_term_polys(charlier_strict(), 3);
    REQUIRE(seq.polys.size() == 4);
    CHECK(seq.polys[0] == Polynomial(1));
    CHECK(seq.polys[1] == parse_polynomial("x - lambda"));
    CHECK(seq.polys[2] == parse_polynomial("x^2 - (2*lambda + 1)*x + lambda^2"));
    CHECK(seq.polys[3] ==
          parse_polynomial("x^3 - (3*lambda + t + q + 1)*x^2 + (3*lambda^2 + (t + q)*(lambda + 1) + lambda)*x - lambda^3"));
}

TEST_CASE("Motzkin moments equal powers of the tridiagonal matrix")
{
    for (const JacobiParams& j : {charlier_strict(), charlier_tgauge(), q_charlier(), ejsmont()}) {
        std::vector<Polynomial> alpha, omega;
        jacobi_vectors(j, 6, alpha, omega);
        CHECK(motzkin_moment_sequence(j, 10) == oracle::matrix_power_moments(alpha, omega, 10));
    }
}

TEST_CASE("Motzkin moments equal partition sums")
{
    for (int n = 1; n <= 8; ++n) {
        CHECK(moment_by_motzkin(charlier_strict(), n) == moment_by_partitions(n, NestingMode::Strict));
        CHECK(moment_by_motzkin(charlier_tgauge(), n) == moment_by_partitions(n, NestingMode::CoveredSingleton));
    }
    CHECK(moment_by_motzkin(charlier_strict(), 0) == Polynomial(1));
}

TEST_CASE("classical Charlier moments are Touchard polynomials")
{
    const auto s = oracle::stirling2(10);
    const auto m = motzkin_moment_sequence(charlier_strict(), 10);
    for (int n = 1; n <= 10; ++n) {
        Polynomial touchard;
        for (int k = 1; k <= n; ++k) touchard.add_term(s[n][k], Monomial::of(Var::Lambda, static_cast<unsigned>(k)));
        CHECK(m[n].substitute(Var::Q, Polynomial(1)).substitute(Var::T, Polynomial(1)) == touchard);
    }
}

TEST_CASE("rational specialization")
{
    const Assignment at{{Var::Q, Rational(1, 3)}, {Var::T, Rational(2, 3)}, {Var::Lambda, Rational(3, 2)}};
    const RationalJacobi rj = specialize(charlier_strict(), at, 5);
    const auto exact = motzkin_moment_sequence(rj, 8);
    const auto symbolic = motzkin_moment_sequence(charlier_strict(), 8);
    for (int n = 0; n <= 8; ++n) CHECK(exact[n] == symbolic[n].evaluate(at));
    CHECK(oracle::matrix_power_moments(rj.alpha, rj.omega, 8) == exact);
}

TEST_CASE("binomial moments at q = t = 1 are binomial distribution moments")
{
    for (long m : {1L, 3L, 4L}) {
        const Rational p(1, 3);
        const RationalJacobi j = binomial_specialized(m, p, Rational(1), Rational(1), 8);
        const auto moments = motzkin_moment_sequence(j, 12);
        for (int n = 0; n <= 12; ++n) {
            Rational direct = 0;
            for (long k = 0; k <= m; ++k) {
                Rational w = Rational(oracle::binomial(m, k));
                for (long i = 0; i < k; ++i) w *= p;
                for (long i = 0; i < m - k; ++i) w *= 1 - p;
                Rational kn = 1;
                for (int i = 0; i < n; ++i) kn *= k;
                direct += w * kn;
            }
            CHECK(moments[n] == direct);
        }
    }
}

TEST_CASE("binomial clamp")
{
    const RationalJacobi j = binomial_specialized(1, Rational(1, 2), Rational(1, 3), Rational(1), 5);
    CHECK(j.omega[1] == Rational(1, 4));
    CHECK(j.omega[2] == 0);
    CHECK(j.omega[3] == 0);
    CHECK(j.omega[4] == 0);
    // Bernoulli(1/2) moments.
    const auto moments = motzkin_moment_sequence(j, 8);
    for (int n = 1; n <= 8; ++n) CHECK(moments[n] == Rational(1, 2));
    const Polynomial lam = oracle::lambda();
    CHECK(binomial(Polynomial(1), lam).omega(3) == qt_number(3) * (1 - qt_number(2)) * lam * (1 - lam));
}

TEST_CASE("moment functional")
{
    const std::vector<Polynomial> moments{1, oracle::lambda(), parse_polynomial("lambda^2 + lambda")};
    CHECK(moment_functional(parse_polynomial("x^2 - 2*x + 3"), moments) == parse_polynomial("lambda^2 - lambda + 3"));
    CHECK_THROWS_AS(moment_functional(parse_polynomial("x^3"), moments), InsufficientMoments);
}

TEST_CASE("orthogonality")
{
    for (const JacobiParams& j : {charlier_strict(), charlier_tgauge(), ejsmont()}) {
        const auto moments = motzkin_moment_sequence(j, 12);
        CHECK(check_orthogonality(j, 6, moments).ok());
    }
    auto wrong = motzkin_moment_sequence(charlier_strict(), 8);
    wrong[4] += 1;
    CHECK_FALSE(check_orthogonality(charlier_strict(), 4, wrong).ok());
}

TEST_CASE("Charlier polynomials of the Poisson operator")
{
    const CheckReport r = check_charlier_fock_identity(8);
    CHECK(r.ok());
    CHECK(r.checked > 0);
}

TEST_CASE("Hankel determinants")
{
    for (const auto& at : {Assignment{{Var::Q, Rational(1, 3)}, {Var::T, Rational(2, 3)}, {Var::Lambda, 1}},
                           Assignment{{Var::Q, Rational(-1, 4)}, {Var::T, Rational(1, 2)}, {Var::Lambda, 2}},
                           Assignment{{Var::Q, 0}, {Var::T, 1}, {Var::Lambda, 1}}}) {
        CHECK(check_hankel_positivity(charlier_strict(), at, 5).ok());
    }
    const Assignment negative{{Var::Q, Rational(1, 3)}, {Var::T, Rational(2, 3)}, {Var::Lambda, -1}};
    CHECK_FALSE(check_hankel_positivity(charlier_strict(), negative, 3).ok());
}

TEST_CASE("J-fraction series")
{
    CHECK(jfraction_series(charlier_strict(), 0) == std::vector<Polynomial>{1});
    CHECK(jfraction_series(charlier_strict(), 2) ==
          std::vector<Polynomial>{1, oracle::lambda(), parse_polynomial("lambda^2 + lambda")});
    for (const JacobiParams& j : {charlier_strict(), charlier_tgauge(), q_charlier(), ejsmont()}) {
        CHECK(jfraction_series(j, 10) == motzkin_moment_sequence(j, 10));
    }
}

TEST_CASE("Poisson limit")
{
    const auto result = poisson_limit_check(6, Rational(1), {10, 100, 1000}, Rational(1, 3), Rational(2, 3));
    CHECK(result.report.ok());
    REQUIRE(result.deviation.size() == 6);
    for (const auto& d : result.deviation[0]) CHECK(d == 0);
    for (std::size_t n = 1; n < 6; ++n) {
        CHECK(result.deviation[n][0] > result.deviation[n][1]);
        CHECK(result.deviation[n][1] > result.deviation[n][2]);
    }
}
