#include "doctest.h"
#include "oracles.hpp"
#include "qtmoments/fock.hpp"
#include "qtmoments/partitions.hpp"
#include "qtmoments/qtnum.hpp"

using namespace qtmoments;

namespace {

std::vector<OperatorWord> all_words(int n)
{
    static const char letters[] = {'C', 'A', 'N', 'S'};
    std::vector<OperatorWord> out;
    std::string w(static_cast<std::size_t>(n), 'C');
    std::vector<int> digit(n, 0);
    for (;;) {
        for (int i = 0; i < n; ++i) w[i] = letters[digit[i]];
        out.push_back(OperatorWord::parse(w));
        int i = n - 1;
        while (i >= 0 && digit[i] == 3) digit[i--] = 0;
        if (i < 0) break;
        ++digit[i];
    }
    return out;
}

}  // namespace

TEST_CASE("letters act on the rescaled basis")
{
    const Polynomial lam = oracle::lambda();
    const FockVector f2 = FockVector::basis(5, 2);
    FockVector expect = FockVector::basis(5, 3);
    expect *= lam;
    CHECK(apply_letter(OperatorLetter::Creation, f2, ScalarGauge::Identity) == expect);

    expect = FockVector::basis(5, 1);
    expect *= qt_number(2);
    CHECK(apply_letter(OperatorLetter::Annihilation, f2, ScalarGauge::Identity) == expect);

    expect = FockVector::basis(5, 2);
    expect *= qt_number(2);
    CHECK(apply_letter(OperatorLetter::Number, f2, ScalarGauge::Identity) == expect);

    expect = FockVector::basis(5, 2);
    expect *= lam;
    CHECK(apply_letter(OperatorLetter::Scalar, f2, ScalarGauge::Identity) == expect);
    expect *= oracle::t().pow(2);
    CHECK(apply_letter(OperatorLetter::Scalar, f2, ScalarGauge::TPowerN) == expect);

    CHECK(apply_letter(OperatorLetter::Annihilation, FockVector::basis(5, 0), ScalarGauge::Identity).is_zero());
    CHECK_THROWS_AS(apply_letter(OperatorLetter::Creation, FockVector::basis(3, 3), ScalarGauge::Identity),
                    TruncationOverflow);
}

TEST_CASE("words")
{
    const OperatorWord w = OperatorWord::parse("AASNCC");
    CHECK(w.length() == 6);
    CHECK(w.to_string() == "AASNCC");
    CHECK(w.factor(1) == OperatorLetter::Creation);
    CHECK(w.factor(6) == OperatorLetter::Annihilation);
    CHECK(w.levels() == std::vector<int>{0, 1, 2, 2, 2, 1, 0});
    CHECK(w.is_contributor());
    CHECK_FALSE(OperatorWord::parse("CA").is_contributor());
    CHECK_FALSE(OperatorWord::parse("N").is_contributor());
    CHECK_FALSE(OperatorWord::parse("C").is_contributor());
    CHECK(OperatorWord::from_applied({OperatorLetter::Creation, OperatorLetter::Annihilation}).to_string() == "AC");
    CHECK_THROWS_AS(OperatorWord::parse("CX"), Error);
}

TEST_CASE("only contributors have a nonzero vacuum expectation")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& w : all_words(n)) {
            const bool nonzero = !vacuum_expectation_word(w, ScalarGauge::Identity).is_zero();
            CHECK(nonzero == w.is_contributor());
        }
    }
}

TEST_CASE("operator moments equal the sum over words")
{
    for (auto gauge : {ScalarGauge::Identity, ScalarGauge::TPowerN}) {
        for (int n = 1; n <= 6; ++n) {
            Polynomial sum;
            for (const auto& w : all_words(n)) sum += vacuum_expectation_word(w, gauge);
            CHECK(moment_by_operator(n, gauge) == sum);
            CHECK(moment_by_operator(n, gauge, n + 4) == sum);
        }
    }
}

TEST_CASE("operator moments equal the partition sums")
{
    for (int n = 1; n <= 8; ++n) {
        CHECK(moment_by_operator(n, ScalarGauge::Identity) == moment_by_partitions(n, NestingMode::Strict));
        CHECK(moment_by_operator(n, ScalarGauge::TPowerN) == moment_by_partitions(n, NestingMode::CoveredSingleton));
    }
}

TEST_CASE("commutation relation")
{
    CHECK(check_commutation(14).ok());
    CHECK(check_commutation(10, Rational(1, 3), Rational(2, 3)).ok());
    CHECK(check_commutation(10, Rational(-1, 2), Rational(1)).ok());
}

TEST_CASE("inner product against permutation sums")
{
    for (int n = 1; n <= 6; ++n) {
        GramMatrix ones(n, std::vector<Rational>(n, Rational(1)));
        CHECK(qt_inner_product(ones) == oracle::brute_inversion_sum(n));
        CHECK(qt_inner_product(ones) == qt_factorial(static_cast<unsigned>(n)));
    }
    const GramMatrix g{{Rational(1, 2), Rational(2), Rational(-1)},
                       {Rational(3), Rational(1, 3), Rational(0)},
                       {Rational(1), Rational(1), Rational(5, 4)}};
    for (const auto& [q, t] : {std::pair{Rational(1, 3), Rational(2, 3)}, std::pair{Rational(-1, 4), Rational(1)}}) {
        CHECK(qt_inner_product_at(g, q, t) == oracle::brute_inner(g, q, t));
    }
    CHECK_THROWS_AS(qt_inner_product(g), Error);
}

TEST_CASE("one-mode norms are factorials")
{
    const Rational q(1, 3), t(1, 2);
    const GramMatrix one{{Rational(1)}};
    const MultiModeFock space(one, 5, q, t);
    for (const auto& w : space.basis()) {
        const Rational expect = qt_factorial(static_cast<unsigned>(w.size())).evaluate({{Var::Q, q}, {Var::T, t}});
        CHECK(space.inner(w, w) == expect);
    }
}

TEST_CASE("multi-mode space")
{
    const GramMatrix g{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    const MultiModeFock space(g, 3, Rational(1, 3), Rational(1, 2));
    CHECK(space.basis().size() == 15);
    CHECK(space.basis().front().empty());
    CHECK(space.create(1, {0}) == MultiModeFock::Vector{{Rational(1), {1, 0}}});

    for (const auto& [q, t] : {std::pair{Rational(1, 3), Rational(1, 2)}, std::pair{Rational(-1, 4), Rational(2, 3)}}) {
        CHECK(check_adjointness(g, 4, q, t).ok());
        CHECK(check_adjointness({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}}, 3, q, t).ok());
    }
    for (const auto& [q, t] : {std::pair{Rational(1, 3), Rational(1, 2)}, std::pair{Rational(-1, 4), Rational(1, 2)},
                               std::pair{Rational(0), Rational(1)}, std::pair{Rational(9, 10), Rational(1)}}) {
        CHECK(check_gram_positivity(g, 4, q, t).ok());
    }
}

TEST_CASE("gram degeneracy is detected")
{
    const GramMatrix g{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK_FALSE(check_gram_positivity(g, 3, Rational(1), Rational(1)).ok());
}
