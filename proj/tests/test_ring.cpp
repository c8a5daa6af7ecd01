#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qtmoments/json_io.hpp"
#include "qtmoments/linalg.hpp"
#include "qtmoments/ring.hpp"

using namespace qtmoments;

namespace {

Polynomial random_poly(std::mt19937& rng, int terms, unsigned max_exp)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    Polynomial p;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        m.set(Var::Lambda, e(rng));
        m.set(Var::T, e(rng));
        m.set(Var::Q, e(rng));
        if (i % 3 == 0) m.set(Var::X, e(rng));
        p.add_term(coeff(rng), m);
    }
    return p;
}

// Dense univariate product in lambda by schoolbook convolution.
std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    std::vector<Integer> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Polynomial from_dense(const std::vector<Integer>& c)
{
    Polynomial p;
    for (std::size_t k = 0; k < c.size(); ++k) p.add_term(c[k], Monomial::of(Var::Lambda, static_cast<unsigned>(k)));
    return p;
}

}  // namespace

TEST_CASE("rationals parse and print")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(Rational(-2, 4)) == "-1/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("canonical strings")
{
    const Polynomial lam = Polynomial::variable(Var::Lambda);
    const Polynomial t = Polynomial::variable(Var::T);
    CHECK(Polynomial().to_string() == "0");
    CHECK((lam * lam + 2 * lam * t - 1).to_string() == "lambda^2 + 2*lambda*t - 1");
    CHECK((-lam).to_string() == "-lambda");
    CHECK(parse_polynomial("(lambda + 1)^2").to_string() == "lambda^2 + 2*lambda + 1");
    CHECK(parse_polynomial("x^3 - (3*lambda + t + q + 1)*x^2").to_string() ==
          "-3*lambda*x^2 - t*x^2 - q*x^2 + x^3 - x^2");
}

TEST_CASE("term order is graded lexicographic")
{
    TermOrder less;
    auto m = [](unsigned l, unsigned t, unsigned q) {
        Monomial r;
        r.set(Var::Lambda, l);
        r.set(Var::T, t);
        r.set(Var::Q, q);
        return r;
    };
    CHECK(less(m(0, 3, 0), m(2, 0, 0)));
    CHECK(less(m(1, 1, 0), m(1, 0, 1)));
    CHECK(less(m(1, 0, 1), m(0, 2, 0)));
    CHECK_FALSE(less(m(1, 1, 1), m(1, 1, 1)));
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(20261016);
    for (int round = 0; round < 60; ++round) {
        const Polynomial a = random_poly(rng, 6, 3);
        const Polynomial b = random_poly(rng, 5, 3);
        const Polynomial c = random_poly(rng, 4, 2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial());
        CHECK(a * Polynomial(1) == a);
        CHECK(a * Polynomial() == Polynomial());
        CHECK(a.pow(3) == a * a * a);
    }
}

TEST_CASE("canonical form round trips through the parser")
{
    std::mt19937 rng(7);
    for (int round = 0; round < 100; ++round) {
        const Polynomial a = random_poly(rng, 8, 4);
        CHECK(parse_polynomial(a.to_string()) == a);
        CHECK(polynomial_from_json(polynomial_to_json(a)) == a);
    }
}

TEST_CASE("univariate products agree with schoolbook convolution")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    for (int round = 0; round < 30; ++round) {
        std::vector<Integer> a(1 + round % 9), b(1 + (round * 7) % 11);
        for (auto& v : a) v = Integer(coeff(rng)) * Integer(coeff(rng)) * Integer(coeff(rng));
        for (auto& v : b) v = coeff(rng);
        CHECK(from_dense(a) * from_dense(b) == from_dense(convolve(a, b)));
    }
}

TEST_CASE("big coefficients stay exact")
{
    const Polynomial p = parse_polynomial("123456789012345678901234567890*lambda + 1");
    const Polynomial sq = p * p;
    CHECK(sq.coefficient(Monomial::of(Var::Lambda, 2)) ==
          Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("evaluation and substitution")
{
    const Polynomial p = parse_polynomial("lambda^2*t - 3*q + 2");
    const Assignment at{{Var::Lambda, Rational(1, 2)}, {Var::T, Rational(2, 3)}, {Var::Q, Rational(-1)}};
    CHECK(p.evaluate(at) == Rational(1, 6) + 3 + 2);
    CHECK_THROWS_AS(p.evaluate({{Var::Lambda, Rational(1)}}), MissingVariable);
    CHECK(p.substitute(Var::T, Polynomial(1)) == parse_polynomial("lambda^2 - 3*q + 2"));
    CHECK(p.substitute(Var::Lambda, parse_polynomial("q + 1")) == parse_polynomial("(q + 1)^2*t - 3*q + 2"));
    CHECK(p.swap_vars(Var::Q, Var::T) == parse_polynomial("lambda^2*q - 3*t + 2"));
    CHECK(p.coefficient_of(Var::Lambda, 2) == parse_polynomial("t"));
    CHECK(p.degree_in(Var::Lambda) == 2);
    CHECK_FALSE(p.contains(Var::X));
}

TEST_CASE("half powers of lambda")
{
    const Polynomial s = Polynomial::variable(Var::S);
    CHECK((s * s * Polynomial::variable(Var::T)).resolve_half_powers() == parse_polynomial("lambda*t"));
    CHECK_THROWS_AS(s.resolve_half_powers(), UnresolvedHalfPower);
    CHECK_THROWS_AS(s.to_string(), UnresolvedHalfPower);
    CHECK_THROWS_AS(parse_polynomial("s"), ParseError);
}

TEST_CASE("parser rejects malformed input")
{
    CHECK_THROWS_AS(parse_polynomial("lambda +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(t"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("y"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/2"), ParseError);
}

TEST_CASE("leading principal minors")
{
    const RationalMatrix m{{Rational(2), Rational(1), Rational(0)},
                           {Rational(1), Rational(2), Rational(1)},
                           {Rational(0), Rational(1), Rational(2)}};
    CHECK(leading_principal_minors(m) == std::vector<Rational>{2, 3, 4});
    const RationalMatrix singular_start{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    CHECK(leading_principal_minors(singular_start) == std::vector<Rational>{0, -1});
    CHECK(determinant(singular_start) == -1);
}
