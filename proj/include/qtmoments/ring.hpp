#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qtmoments {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingVariable : public Error {
public:
    using Error::Error;
};

class UnresolvedHalfPower : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (b != 0) into a reduced rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Formal variables, listed in decreasing precedence for the term order.
/// S is the internal square root of lambda; it never leaves the library.
enum class Var : std::uint8_t { Lambda = 0, T = 1, Q = 2, X = 3, S = 4 };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::Lambda, Var::T, Var::Q, Var::X, Var::S};

std::string_view var_name(Var v);
Var var_from_name(std::string_view name);

class Monomial {
public:
    Monomial() = default;
    static Monomial of(Var v, unsigned exponent = 1);

    unsigned operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
    void set(Var v, unsigned e) { exps_[static_cast<std::size_t>(v)] = e; }
    unsigned degree() const;
    bool is_one() const { return degree() == 0; }

    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

private:
    std::array<unsigned, kNumVars> exps_{};
};

/// Graded lexicographic order, largest first: higher total degree precedes,
/// ties broken by the exponent of lambda, then t, q, x, s.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using Assignment = std::map<Var, Rational>;

/// Sparse polynomial in q, t, lambda, x, s with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Monomial, Integer, TermOrder>;

    Polynomial() = default;
    Polynomial(long c);  // NOLINT(google-explicit-constructor): constants read naturally
    explicit Polynomial(const Integer& c);
    static Polynomial variable(Var v, unsigned exponent = 1);
    static Polynomial term(const Integer& c, const Monomial& m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a monomial, zero when absent.
    Integer coefficient(const Monomial& m) const;
    unsigned degree_in(Var v) const;
    bool contains(Var v) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    void add_term(const Integer& c, const Monomial& m);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

    Polynomial pow(unsigned e) const;

    /// Coefficient of v^k viewed as a polynomial in the remaining variables.
    Polynomial coefficient_of(Var v, unsigned k) const;

    /// Replaces every occurrence of v by value.
    Polynomial substitute(Var v, const Polynomial& value) const;

    /// Exchanges the exponents of two variables.
    Polynomial swap_vars(Var a, Var b) const;

    /// Applies s^2 = lambda. Throws UnresolvedHalfPower if some term carries
    /// an odd power of s.
    Polynomial resolve_half_powers() const;

    /// Exact value at a rational point. Throws MissingVariable.
    Rational evaluate(const Assignment& at) const;

    /// Canonical text form, e.g. "lambda^2 + 2*lambda*t - 1".
    /// Throws UnresolvedHalfPower if s occurs.
    std::string to_string() const;
    /// Same layout but permits s; for diagnostics only.
    std::string debug_string() const;

private:
    std::string render(bool allow_s) const;
    Terms terms_;
};

/// Parses the canonical form and, more generally, integer expressions built
/// from +, -, *, ^, parentheses and the variable names.
Polynomial parse_polynomial(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace qtmoments
