#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtmoments/linalg.hpp"
#include "qtmoments/ring.hpp"

namespace qtmoments {

class TruncationOverflow : public Error {
public:
    using Error::Error;
};

/// Outcome of an exact identity check: empty failures means it held.
struct CheckReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string what) { failures.push_back(std::move(what)); }
};

/// Truncated one-mode vector in the rescaled basis f_k = lambda^{-k/2} xi^{(x)k},
/// f_0 the vacuum. Entry k is the coefficient of f_k.
class FockVector {
public:
    explicit FockVector(int dim);
    static FockVector basis(int dim, int k);

    int dim() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& operator[](int k) const { return coeffs_[k]; }
    Polynomial& operator[](int k) { return coeffs_[k]; }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    FockVector& operator+=(const FockVector& other);
    FockVector& operator-=(const FockVector& other);
    FockVector& operator*=(const Polynomial& scalar);
    bool operator==(const FockVector&) const = default;

private:
    std::vector<Polynomial> coeffs_;
};

enum class OperatorLetter { Creation, Annihilation, Number, Scalar };

/// 'C', 'A', 'N', 'S'.
char letter_char(OperatorLetter l);
OperatorLetter letter_from_char(char c);

/// Constant part of the Poisson operator: lambda*1 or lambda*t^N.
enum class ScalarGauge { Identity, TPowerN };

const char* to_string(ScalarGauge gauge);

/// A product Z_n ... Z_1 of operator letters. Letters are stored in display
/// order: index 0 is the leftmost (last applied) factor Z_n.
class OperatorWord {
public:
    OperatorWord() = default;
    explicit OperatorWord(std::vector<OperatorLetter> display_order);
    /// Parses a string over {C, A, N, S}, leftmost character last applied.
    static OperatorWord parse(std::string_view text);
    /// Builds a word from factors listed in application order Z_1, Z_2, ...
    static OperatorWord from_applied(const std::vector<OperatorLetter>& applied);

    std::size_t length() const { return letters_.size(); }
    const std::vector<OperatorLetter>& letters() const { return letters_; }
    /// Factor Z_k for k = 1..length.
    OperatorLetter factor(std::size_t k) const { return letters_[letters_.size() - k]; }
    /// levels[k-1] = l(k) for k = 1..length+1.
    std::vector<int> levels() const;
    bool is_contributor() const;
    std::string to_string() const;

    bool operator==(const OperatorWord&) const = default;

private:
    std::vector<OperatorLetter> letters_;
};

/// One Poisson-operator summand acting on the f-basis: Creation f_k = lambda f_{k+1},
/// Annihilation f_k = [k] f_{k-1}, Number f_k = [k] f_k, Scalar f_k = lambda f_k
/// (Identity) or lambda t^k f_k (TPowerN). Throws TruncationOverflow when a
/// creation would leave the truncated space.
FockVector apply_letter(OperatorLetter letter, const FockVector& v, ScalarGauge gauge);

/// p = N + C + A + S applied once.
FockVector apply_poisson(const FockVector& v, ScalarGauge gauge);

/// Coefficient of f_0 in w f_0.
Polynomial vacuum_expectation_word(const OperatorWord& w, ScalarGauge gauge);

/// phi(p^n) by n applications of p to the vacuum; dim defaults to n+1.
Polynomial moment_by_operator(int n, ScalarGauge gauge, int dim = -1);

/// Checks (A A^dagger - q A^dagger A) xi^k = t^k xi^k for k < dim with the
/// unweighted operators. Without q and t the check is symbolic.
CheckReport check_commutation(int dim);
CheckReport check_commutation(int dim, const Rational& q, const Rational& t);

/// Entry (i, j) = <xi_i | eta_j>.
using GramMatrix = RationalMatrix;

/// sum over permutations sigma of q^{inv} t^{n(n-1)/2 - inv} prod_k g[k][sigma(k)].
/// The Gram entries must be integers so that the result is a Polynomial.
Polynomial qt_inner_product(const GramMatrix& g);

/// The same sum at a rational point (q, t); any rational Gram entries.
Rational qt_inner_product_at(const GramMatrix& g, const Rational& q, const Rational& t);

/// Finite-alphabet (q,t)-Fock space at a rational point, basis vectors are
/// words of length <= max_level over {0..d-1}, ordered by length then lexicographically.
class MultiModeFock {
public:
    using Word = std::vector<int>;
    using Vector = std::vector<std::pair<Rational, Word>>;

    MultiModeFock(GramMatrix g, int max_level, Rational q, Rational t);

    int alphabet() const { return static_cast<int>(g_.size()); }
    int max_level() const { return max_level_; }
    const std::vector<Word>& basis() const { return basis_; }

    /// (u | v)_{q,t} of two basis words.
    Rational inner(const Word& u, const Word& v) const;
    Rational inner(const Vector& u, const Vector& v) const;

    /// Left creation by xi_i.
    Vector create(int i, const Word& w) const;
    /// Annihilation by xi_i with weights q^{k-1} t^{n-k} <xi_i | w_k>.
    Vector annihilate(int i, const Word& w) const;

    /// Gram matrix of the basis under (.|.)_{q,t}.
    RationalMatrix gram() const;

private:
    GramMatrix g_;
    int max_level_;
    Rational q_, t_;
    std::vector<Word> basis_;
};

/// (A^dagger(xi_i) u | v) = (u | A(xi_i) v) on every basis pair and letter i.
CheckReport check_adjointness(const GramMatrix& g, int max_level, const Rational& q, const Rational& t);

/// Every leading principal minor of the basis Gram matrix is positive.
CheckReport check_gram_positivity(const GramMatrix& g, int max_level, const Rational& q, const Rational& t);

}  // namespace qtmoments
