#include "qtmoments/fock.hpp"

#include <algorithm>
#include <numeric>

#include "qtmoments/qtnum.hpp"

namespace qtmoments {

FockVector::FockVector(int dim)
{
    if (dim < 0) throw Error("negative truncation level");
    coeffs_.resize(static_cast<std::size_t>(dim) + 1);
}

FockVector FockVector::basis(int dim, int k)
{
    FockVector v(dim);
    if (k < 0 || k > dim) throw TruncationOverflow("basis vector outside the truncated space");
    v[k] = Polynomial(1);
    return v;
}

bool FockVector::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

FockVector& FockVector::operator+=(const FockVector& other)
{
    if (other.dim() != dim()) throw Error("dimension mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& other)
{
    if (other.dim() != dim()) throw Error("dimension mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

FockVector& FockVector::operator*=(const Polynomial& scalar)
{
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

char letter_char(OperatorLetter l)
{
    switch (l) {
    case OperatorLetter::Creation: return 'C';
    case OperatorLetter::Annihilation: return 'A';
    case OperatorLetter::Number: return 'N';
    case OperatorLetter::Scalar: return 'S';
    }
    return '?';
}

OperatorLetter letter_from_char(char c)
{
    switch (c) {
    case 'C': return OperatorLetter::Creation;
    case 'A': return OperatorLetter::Annihilation;
    case 'N': return OperatorLetter::Number;
    case 'S': return OperatorLetter::Scalar;
    default: throw ParseError(std::string("unknown operator letter '") + c + "'");
    }
}

const char* to_string(ScalarGauge gauge)
{
    return gauge == ScalarGauge::Identity ? "identity" : "tpower";
}

OperatorWord::OperatorWord(std::vector<OperatorLetter> display_order) : letters_(std::move(display_order)) {}

OperatorWord OperatorWord::parse(std::string_view text)
{
    std::vector<OperatorLetter> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(letter_from_char(c));
    return OperatorWord(std::move(letters));
}

OperatorWord OperatorWord::from_applied(const std::vector<OperatorLetter>& applied)
{
    return OperatorWord(std::vector<OperatorLetter>(applied.rbegin(), applied.rend()));
}

std::vector<int> OperatorWord::levels() const
{
    std::vector<int> l{0};
    for (std::size_t k = 1; k <= length(); ++k) {
        int step = 0;
        if (factor(k) == OperatorLetter::Creation) step = 1;
        else if (factor(k) == OperatorLetter::Annihilation) step = -1;
        l.push_back(l.back() + step);
    }
    return l;
}

bool OperatorWord::is_contributor() const
{
    const auto l = levels();
    if (l.back() != 0) return false;
    for (std::size_t k = 1; k <= length(); ++k) {
        if (l[k - 1] < 0) return false;
        if (factor(k) == OperatorLetter::Number && l[k - 1] < 1) return false;
    }
    return true;
}

std::string OperatorWord::to_string() const
{
    std::string s;
    for (auto l : letters_) s += letter_char(l);
    return s;
}

FockVector apply_letter(OperatorLetter letter, const FockVector& v, ScalarGauge gauge)
{
    const int dim = v.dim();
    FockVector out(dim);
    const Polynomial lambda = Polynomial::variable(Var::Lambda);
    switch (letter) {
    case OperatorLetter::Creation:
        if (!v[dim].is_zero()) throw TruncationOverflow("creation past truncation level " + std::to_string(dim));
        for (int k = 0; k < dim; ++k) {
            if (!v[k].is_zero()) out[k + 1] = v[k] * lambda;
        }
        break;
    case OperatorLetter::Annihilation:
        for (int k = 1; k <= dim; ++k) {
            if (!v[k].is_zero()) out[k - 1] = v[k] * qt_number(k);
        }
        break;
    case OperatorLetter::Number:
        for (int k = 1; k <= dim; ++k) {
            if (!v[k].is_zero()) out[k] = v[k] * qt_number(k);
        }
        break;
    case OperatorLetter::Scalar:
        for (int k = 0; k <= dim; ++k) {
            if (v[k].is_zero()) continue;
            out[k] = v[k] * lambda;
            if (gauge == ScalarGauge::TPowerN && k > 0) out[k] *= Polynomial::variable(Var::T, k);
        }
        break;
    }
    return out;
}

FockVector apply_poisson(const FockVector& v, ScalarGauge gauge)
{
    FockVector out = apply_letter(OperatorLetter::Number, v, gauge);
    out += apply_letter(OperatorLetter::Creation, v, gauge);
    out += apply_letter(OperatorLetter::Annihilation, v, gauge);
    out += apply_letter(OperatorLetter::Scalar, v, gauge);
    return out;
}

Polynomial vacuum_expectation_word(const OperatorWord& w, ScalarGauge gauge)
{
    const auto levels = w.levels();
    const int top = *std::max_element(levels.begin(), levels.end());
    if (*std::min_element(levels.begin(), levels.end()) < 0) return {};
    FockVector v = FockVector::basis(std::max(top, 0), 0);
    for (std::size_t k = 1; k <= w.length(); ++k) {
        v = apply_letter(w.factor(k), v, gauge);
        if (v.is_zero()) return {};
    }
    return v[0];
}

Polynomial moment_by_operator(int n, ScalarGauge gauge, int dim)
{
    if (n < 0) throw Error("moment order must be non-negative");
    if (dim < 0) dim = n + 1;
    if (dim < n) throw Error("truncation level below the moment order");
    FockVector v = FockVector::basis(dim, 0);
    for (int step = 0; step < n; ++step) v = apply_poisson(v, gauge);
    return v[0];
}

namespace {

// Unweighted one-mode operators on the xi^{(x)k} basis.
std::vector<Polynomial> raw_create(const std::vector<Polynomial>& v)
{
    std::vector<Polynomial> out(v.size());
    if (!v.back().is_zero()) throw TruncationOverflow("creation past truncation level");
    for (std::size_t k = 0; k + 1 < v.size(); ++k) out[k + 1] = v[k];
    return out;
}

std::vector<Polynomial> raw_annihilate(const std::vector<Polynomial>& v)
{
    std::vector<Polynomial> out(v.size());
    for (std::size_t k = 1; k < v.size(); ++k) out[k - 1] = v[k] * qt_number(static_cast<unsigned>(k));
    return out;
}

// (A A^dagger - q A^dagger A) xi^k, returned as the coefficient of xi^k.
Polynomial commutator_on_level(int k, int dim)
{
    std::vector<Polynomial> e(static_cast<std::size_t>(dim) + 1);
    e[k] = Polynomial(1);
    auto lhs = raw_annihilate(raw_create(e));
    auto rhs = raw_create(raw_annihilate(e));
    const Polynomial q = Polynomial::variable(Var::Q);
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= q * rhs[i];
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (static_cast<int>(i) != k && !lhs[i].is_zero()) throw Error("commutator left the level");
    }
    return lhs[k];
}

}  // namespace

CheckReport check_commutation(int dim)
{
    CheckReport report{"commutation (symbolic)"};
    for (int k = 0; k < dim; ++k) {
        ++report.checked;
        Polynomial got = commutator_on_level(k, dim);
        Polynomial want = Polynomial::variable(Var::T, static_cast<unsigned>(k));
        if (got != want) report.fail("level " + std::to_string(k) + ": " + got.to_string());
    }
    return report;
}

CheckReport check_commutation(int dim, const Rational& q, const Rational& t)
{
    CheckReport report{"commutation at q=" + to_string(q) + ", t=" + to_string(t)};
    const Assignment at{{Var::Q, q}, {Var::T, t}};
    for (int k = 0; k < dim; ++k) {
        ++report.checked;
        Rational got = commutator_on_level(k, dim).evaluate(at);
        Rational want = Polynomial::variable(Var::T, static_cast<unsigned>(k)).evaluate(at);
        if (got != want) report.fail("level " + std::to_string(k) + ": " + to_string(got));
    }
    return report;
}

namespace {

int inversions(const std::vector<int>& sigma)
{
    int inv = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            if (sigma[i] > sigma[j]) ++inv;
        }
    }
    return inv;
}

// Entry k = sum over permutations with k inversions of prod g[i][sigma(i)].
std::vector<Rational> inversion_profile(const GramMatrix& g)
{
    const std::size_t n = g.size();
    for (const auto& row : g) {
        if (row.size() != n) throw Error("Gram matrix is not square");
    }
    std::vector<Rational> profile(n * (n - (n > 0 ? 1 : 0)) / 2 + 1, Rational(0));
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        Rational prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= g[i][sigma[i]];
        if (prod != 0) profile[inversions(sigma)] += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return profile;
}

Rational rational_pow(const Rational& b, std::size_t e)
{
    Rational r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

Polynomial qt_inner_product(const GramMatrix& g)
{
    const auto profile = inversion_profile(g);
    const unsigned top = static_cast<unsigned>(profile.size() - 1);
    Polynomial p;
    for (unsigned k = 0; k <= top; ++k) {
        Rational c = profile[k];
        c.canonicalize();
        if (c.get_den() != 1) throw Error("qt_inner_product needs integer Gram entries; use qt_inner_product_at");
        Monomial m;
        m.set(Var::Q, k);
        m.set(Var::T, top - k);
        p.add_term(c.get_num(), m);
    }
    return p;
}

Rational qt_inner_product_at(const GramMatrix& g, const Rational& q, const Rational& t)
{
    const auto profile = inversion_profile(g);
    const std::size_t top = profile.size() - 1;
    Rational total = 0;
    for (std::size_t k = 0; k <= top; ++k) {
        if (profile[k] == 0) continue;
        total += profile[k] * rational_pow(q, k) * rational_pow(t, top - k);
    }
    total.canonicalize();
    return total;
}

MultiModeFock::MultiModeFock(GramMatrix g, int max_level, Rational q, Rational t)
    : g_(std::move(g)), max_level_(max_level), q_(std::move(q)), t_(std::move(t))
{
    if (g_.empty()) throw Error("empty alphabet");
    for (const auto& row : g_) {
        if (row.size() != g_.size()) throw Error("Gram matrix is not square");
    }
    const int d = alphabet();
    std::vector<Word> level{Word{}};
    basis_ = level;
    for (int len = 1; len <= max_level_; ++len) {
        std::vector<Word> next;
        for (const auto& w : level) {
            for (int a = 0; a < d; ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(std::move(x));
            }
        }
        std::sort(next.begin(), next.end());
        basis_.insert(basis_.end(), next.begin(), next.end());
        level = std::move(next);
    }
}

Rational MultiModeFock::inner(const Word& u, const Word& v) const
{
    if (u.size() != v.size()) return 0;
    GramMatrix m(u.size(), std::vector<Rational>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = g_[u[i]][v[j]];
    }
    return qt_inner_product_at(m, q_, t_);
}

Rational MultiModeFock::inner(const Vector& u, const Vector& v) const
{
    Rational total = 0;
    for (const auto& [cu, wu] : u) {
        for (const auto& [cv, wv] : v) total += cu * cv * inner(wu, wv);
    }
    return total;
}

MultiModeFock::Vector MultiModeFock::create(int i, const Word& w) const
{
    if (static_cast<int>(w.size()) >= max_level_) throw TruncationOverflow("creation past truncation level");
    Word x{i};
    x.insert(x.end(), w.begin(), w.end());
    return {{Rational(1), std::move(x)}};
}

MultiModeFock::Vector MultiModeFock::annihilate(int i, const Word& w) const
{
    Vector out;
    const std::size_t n = w.size();
    for (std::size_t k = 1; k <= n; ++k) {
        Rational c = rational_pow(q_, k - 1) * rational_pow(t_, n - k) * g_[i][w[k - 1]];
        if (c == 0) continue;
        Word rest = w;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k - 1));
        out.emplace_back(c, std::move(rest));
    }
    return out;
}

RationalMatrix MultiModeFock::gram() const
{
    RationalMatrix m(basis_.size(), std::vector<Rational>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = 0; j < basis_.size(); ++j) m[i][j] = inner(basis_[i], basis_[j]);
    }
    return m;
}

CheckReport check_adjointness(const GramMatrix& g, int max_level, const Rational& q, const Rational& t)
{
    CheckReport report{"adjointness, d=" + std::to_string(g.size()) + " at q=" + to_string(q) + ", t=" + to_string(t)};
    const MultiModeFock space(g, max_level, q, t);
    for (int i = 0; i < space.alphabet(); ++i) {
        for (const auto& u : space.basis()) {
            if (static_cast<int>(u.size()) >= max_level) continue;
            const auto created = space.create(i, u);
            for (const auto& v : space.basis()) {
                ++report.checked;
                Rational lhs = space.inner(created, {{Rational(1), v}});
                Rational rhs = space.inner({{Rational(1), u}}, space.annihilate(i, v));
                if (lhs != rhs) {
                    report.fail("letter " + std::to_string(i) + ", |u|=" + std::to_string(u.size()) +
                                ", |v|=" + std::to_string(v.size()) + ": " + to_string(lhs) + " != " +
                                to_string(rhs));
                }
            }
        }
    }
    return report;
}

CheckReport check_gram_positivity(const GramMatrix& g, int max_level, const Rational& q, const Rational& t)
{
    CheckReport report{"gram positivity, d=" + std::to_string(g.size()) + " at q=" + to_string(q) + ", t=" + to_string(t)};
    const MultiModeFock space(g, max_level, q, t);
    const auto minors = leading_principal_minors(space.gram());
    for (std::size_t k = 0; k < minors.size(); ++k) {
        ++report.checked;
        if (minors[k] <= 0) report.fail("minor " + std::to_string(k + 1) + " = " + to_string(minors[k]));
    }
    return report;
}

}  // namespace qtmoments
