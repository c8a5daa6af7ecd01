#include "qtmoments/ring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace qtmoments {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto bad = [&] { return ParseError("invalid rational literal \"" + s + "\""); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto is_int = [](const std::string& d, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) i = 1;
        if (i >= d.size()) return false;
        for (; i < d.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(d[i]))) return false;
        }
        return true;
    };
    if (!is_int(num, true) || !is_int(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw bad();
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_str(10);
}

std::string_view var_name(Var v)
{
    switch (v) {
    case Var::Lambda: return "lambda";
    case Var::T: return "t";
    case Var::Q: return "q";
    case Var::X: return "x";
    case Var::S: return "s";
    }
    return "?";
}

Var var_from_name(std::string_view name)
{
    for (Var v : kAllVars) {
        if (var_name(v) == name) return v;
    }
    throw ParseError("unknown variable \"" + std::string(name) + "\"");
}

Monomial Monomial::of(Var v, unsigned exponent)
{
    Monomial m;
    m.set(v, exponent);
    return m;
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) m.exps_[i] = exps_[i] + other.exps_[i];
    return m;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const
{
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (Var v : kAllVars) {
        if (a[v] != b[v]) return a[v] > b[v];
    }
    return false;
}

Polynomial::Polynomial(long c)
{
    if (c != 0) terms_.emplace(Monomial{}, Integer(c));
}

Polynomial::Polynomial(const Integer& c)
{
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Var v, unsigned exponent)
{
    return term(1, Monomial::of(v, exponent));
}

Polynomial Polynomial::term(const Integer& c, const Monomial& m)
{
    Polynomial p;
    p.add_term(c, m);
    return p;
}

Integer Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

unsigned Polynomial::degree_in(Var v) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

bool Polynomial::contains(Var v) const
{
    return degree_in(v) > 0;
}

void Polynomial::add_term(const Integer& c, const Monomial& m)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) add_term(c, m);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_) add_term(-c, m);
    return *this;
}

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const
    {
        std::size_t h = 0;
        for (Var v : kAllVars) h = h * 1000003u + m[v];
        return h;
    }
};

struct MonomialEq {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        for (Var v : kAllVars) {
            if (a[v] != b[v]) return false;
        }
        return true;
    }
};

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    std::unordered_map<Monomial, Integer, MonomialHash, MonomialEq> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Integer& slot = acc[ma * mb];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    Polynomial r;
    for (auto& [m, c] : acc) {
        if (c != 0) r.terms_.emplace(m, std::move(c));
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::coefficient_of(Var v, unsigned k) const
{
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m[v] != k) continue;
        Monomial rest = m;
        rest.set(v, 0);
        r.add_term(c, rest);
    }
    return r;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const
{
    Polynomial r;
    std::vector<Polynomial> powers{Polynomial(1)};
    for (const auto& [m, c] : terms_) {
        unsigned e = m[v];
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Monomial rest = m;
        rest.set(v, 0);
        r += term(c, rest) * powers[e];
    }
    return r;
}

Polynomial Polynomial::swap_vars(Var a, Var b) const
{
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial s = m;
        s.set(a, m[b]);
        s.set(b, m[a]);
        r.add_term(c, s);
    }
    return r;
}

Polynomial Polynomial::resolve_half_powers() const
{
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        unsigned e = m[Var::S];
        if (e % 2 != 0) {
            throw UnresolvedHalfPower("odd power of sqrt(lambda) in " + debug_string());
        }
        Monomial out = m;
        out.set(Var::S, 0);
        out.set(Var::Lambda, m[Var::Lambda] + e / 2);
        r.add_term(c, out);
    }
    return r;
}

namespace {

Rational rational_pow(const Rational& base, unsigned e)
{
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    return Rational(num, den);
}

}  // namespace

Rational Polynomial::evaluate(const Assignment& at) const
{
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (Var v : kAllVars) {
            unsigned e = m[v];
            if (e == 0) continue;
            auto it = at.find(v);
            if (it == at.end()) {
                throw MissingVariable("no value assigned to " + std::string(var_name(v)));
            }
            value *= rational_pow(it->second, e);
        }
        total += value;
    }
    total.canonicalize();
    return total;
}

std::string Polynomial::render(bool allow_s) const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!allow_s && m[Var::S] != 0) {
            throw UnresolvedHalfPower("polynomial still contains sqrt(lambda)");
        }
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        if (mag != 1 || m.is_one()) body = mag.get_str(10);
        for (Var v : kAllVars) {
            unsigned e = m[v];
            if (e == 0) continue;
            if (!body.empty()) body += '*';
            body += var_name(v);
            if (e > 1) body += "^" + std::to_string(e);
        }
        out += body;
    }
    return out;
}

std::string Polynomial::to_string() const
{
    return render(false);
}

std::string Polynomial::debug_string() const
{
    return render(true);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.debug_string();
}

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' integer]
// atom   := integer | name | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(text_) + "\"");
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        Polynomial acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Polynomial first = term();
        acc = negate ? -first : first;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Polynomial atom()
    {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial(Integer(std::string(text_.substr(start, pos_ - start)), 10));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const Var v = var_from_name(text_.substr(start, pos_ - start));
            if (v == Var::S) fail("s is not an input variable");
            return Polynomial::variable(v);
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text)
{
    return Parser(text).parse();
}

}  // namespace qtmoments
