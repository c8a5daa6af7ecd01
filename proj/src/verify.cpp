#include "qtmoments/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "qtmoments/cards.hpp"
#include "qtmoments/cfrac.hpp"
#include "qtmoments/orthopoly.hpp"
#include "qtmoments/qtnum.hpp"

namespace qtmoments {

const char* to_string(Method m)
{
    switch (m) {
    case Method::Partitions: return "partitions";
    case Method::Operator: return "operator";
    case Method::Cards: return "cards";
    case Method::Motzkin: return "motzkin";
    case Method::Cfrac: return "cfrac";
    }
    return "?";
}

std::vector<Method> all_methods()
{
    return {Method::Partitions, Method::Operator, Method::Cards, Method::Motzkin, Method::Cfrac};
}

Polynomial moment_via(Method method, int n, NestingMode mode, ScalarGauge gauge, unsigned workers)
{
    if (n < 0) throw Error("moment order must be non-negative");
    switch (method) {
    case Method::Partitions:
        return n == 0 ? Polynomial(1) : moment_by_partitions(n, mode, workers);
    case Method::Operator:
        return moment_by_operator(n, gauge);
    case Method::Cards:
        return moment_by_cards(n, gauge, workers);
    case Method::Motzkin:
        return moment_by_motzkin(charlier_for(gauge), n);
    case Method::Cfrac:
        return cf_series(cf_spec(charlier_for(gauge), default_depth(n)), n).back();
    }
    return {};
}

namespace {

using Suite = std::vector<CheckReport> (*)(const VerifyOptions&);

const std::pair<NestingMode, ScalarGauge> kPairings[] = {
    {NestingMode::Strict, ScalarGauge::Identity},
    {NestingMode::CoveredSingleton, ScalarGauge::TPowerN},
};

std::vector<CheckReport> suite_moments(const VerifyOptions& o)
{
    std::vector<CheckReport> out;
    for (const auto& [mode, gauge] : kPairings) {
        CheckReport r{std::string("five-way moment agreement (") + to_string(mode) + "/" + to_string(gauge) + ")"};
        for (int n = 1; n <= o.n_max; ++n) {
            const Polynomial reference = moment_via(Method::Partitions, n, mode, gauge, o.workers);
            for (Method m : all_methods()) {
                if (m == Method::Partitions) continue;
                if (m == Method::Cards && n > 10) continue;
                ++r.checked;
                Polynomial got = moment_via(m, n, mode, gauge, o.workers);
                if (got != reference) {
                    r.fail("n=" + std::to_string(n) + ": " + to_string(m) + " gives " + got.to_string() +
                           ", partitions give " + reference.to_string());
                }
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> suite_tables(const VerifyOptions&)
{
    CheckReport r{"printed moment table"};
    auto expect = [&](const Polynomial& got, const char* want, const std::string& what) {
        ++r.checked;
        if (got != parse_polynomial(want)) r.fail(what + " = " + got.to_string());
    };
    for (const auto& [mode, gauge] : kPairings) {
        const std::string tag = std::string(" (") + to_string(mode) + ")";
        expect(moment_by_partitions(1, mode), "lambda", "m1" + tag);
        expect(moment_by_partitions(2, mode), "lambda^2 + lambda", "m2" + tag);
    }
    expect(moment_by_partitions(3, NestingMode::CoveredSingleton), "lambda^3 + (2 + t)*lambda^2 + lambda", "m3 covered");
    expect(moment_by_partitions(4, NestingMode::CoveredSingleton),
           "lambda^4 + (3 + t^2 + 2*t)*lambda^3 + (3 + 3*t + q)*lambda^2 + lambda", "m4 covered");
    expect(moment_by_partitions(3, NestingMode::Strict), "lambda^3 + 3*lambda^2 + lambda", "m3 strict");
    ++r.checked;
    if (moment_by_partitions(3, NestingMode::Strict) == moment_by_partitions(3, NestingMode::CoveredSingleton)) {
        r.fail("strict and covered m3 coincide");
    }
    return {r};
}

std::vector<CheckReport> suite_charlier(const VerifyOptions&)
{
    CheckReport r{"printed Charlier polynomials"};
    const auto seq = three_term_polys(charlier_strict(), 3);
    const char* printed[] = {"1", "x - lambda", "x^2 - (2*lambda + 1)*x + lambda^2",
                             "x^3 - (3*lambda + t + q + 1)*x^2 + (3*lambda^2 + (t + q)*(lambda + 1) + lambda)*x - lambda^3"};
    for (int k = 0; k <= 3; ++k) {
        ++r.checked;
        if (seq.polys[k] != parse_polynomial(printed[k])) r.fail("C_" + std::to_string(k) + " = " + seq.polys[k].to_string());
    }
    return {r};
}

std::vector<CheckReport> suite_orthogonality(const VerifyOptions& o)
{
    std::vector<CheckReport> out;
    const int n_max = std::min(6, std::max(o.n_max, 1));
    for (const auto& [mode, gauge] : kPairings) {
        std::vector<Polynomial> moments{Polynomial(1)};
        for (int n = 1; n <= 2 * n_max; ++n) moments.push_back(moment_by_partitions(n, mode, o.workers));
        out.push_back(check_orthogonality(charlier_for(gauge), n_max, moments));
    }
    const std::tuple<Rational, Rational, Rational> samples[] = {{Rational(1, 3), Rational(2, 3), Rational(1)},
                                                                {Rational(-1, 4), Rational(1, 2), Rational(2)},
                                                                {Rational(0), Rational(1), Rational(1)}};
    for (const auto& [q, t, lambda] : samples) {
        out.push_back(check_hankel_positivity(charlier_strict(), {{Var::Q, q}, {Var::T, t}, {Var::Lambda, lambda}}, 5));
    }
    return out;
}

std::vector<CheckReport> suite_fock(const VerifyOptions& o)
{
    std::vector<CheckReport> out{check_charlier_fock_identity(o.n_max)};
    CheckReport r{"number letter equals creation after annihilation at lambda = 1"};
    for (int n = 1; n <= std::min(o.n_max, 6); ++n) {
        for (const auto& w : contributors(n)) {
            std::vector<OperatorLetter> expanded;
            for (auto l : w.letters()) {
                if (l == OperatorLetter::Number) {
                    expanded.push_back(OperatorLetter::Creation);
                    expanded.push_back(OperatorLetter::Annihilation);
                } else {
                    expanded.push_back(l);
                }
            }
            ++r.checked;
            const Polynomial one(1);
            Polynomial a = vacuum_expectation_word(w, ScalarGauge::Identity).substitute(Var::Lambda, one);
            Polynomial b = vacuum_expectation_word(OperatorWord(expanded), ScalarGauge::Identity).substitute(Var::Lambda, one);
            if (a != b) r.fail(w.to_string());
        }
    }
    out.push_back(std::move(r));
    return out;
}

std::vector<CheckReport> suite_specialization(const VerifyOptions& o)
{
    CheckReport r{"specialization ladder"};
    const int n_max = std::max(o.n_max, 6);
    std::vector<Integer> catalan{1}, bell{1};
    for (int n = 1; n <= n_max; ++n) {
        Integer c = 0, b = 0, binom = 1;
        for (int k = 0; k < n; ++k) {
            c += catalan[k] * catalan[n - 1 - k];
            b += binom * bell[k];
            binom = binom * (n - 1 - k) / (k + 1);
        }
        catalan.push_back(c);
        bell.push_back(b);
    }
    const Assignment free_point{{Var::Q, 0}, {Var::T, 1}, {Var::Lambda, 1}};
    const Assignment classical{{Var::Q, 1}, {Var::T, 1}, {Var::Lambda, 1}};
    const JacobiParams qc = q_charlier();
    for (int n = 1; n <= n_max; ++n) {
        const Polynomial m = moment_by_partitions(n, NestingMode::Strict, o.workers);
        r.checked += 3;
        if (m.evaluate(free_point) != Rational(catalan[n])) r.fail("Catalan at n=" + std::to_string(n));
        if (m.evaluate(classical) != Rational(bell[n])) r.fail("Bell at n=" + std::to_string(n));
        if (m.substitute(Var::T, Polynomial(1)) != moment_by_motzkin(qc, n)) r.fail("q-Charlier at n=" + std::to_string(n));
    }
    return {r};
}

std::vector<CheckReport> suite_inner(const VerifyOptions& o)
{
    CheckReport r{"inversion sum equals (q,t)-factorial"};
    for (int n = 1; n <= std::min(o.n_max, 8); ++n) {
        ++r.checked;
        GramMatrix ones(n, std::vector<Rational>(n, Rational(1)));
        if (qt_inner_product(ones) != qt_factorial(static_cast<unsigned>(n))) r.fail("n=" + std::to_string(n));
    }
    return {r};
}

std::vector<CheckReport> suite_commutation(const VerifyOptions&)
{
    return {check_commutation(13), check_commutation(13, Rational(1, 3), Rational(2, 3)),
            check_commutation(13, Rational(0), Rational(1))};
}

GramMatrix identity_gram(int d)
{
    GramMatrix g(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i) g[i][i] = 1;
    return g;
}

std::vector<CheckReport> suite_adjointness(const VerifyOptions&)
{
    std::vector<CheckReport> out;
    const GramMatrix skew{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    for (const auto& [q, t] : {std::pair{Rational(1, 3), Rational(1, 2)}, std::pair{Rational(-1, 4), Rational(2, 3)}}) {
        out.push_back(check_adjointness(identity_gram(1), 4, q, t));
        out.push_back(check_adjointness(identity_gram(2), 4, q, t));
        out.push_back(check_adjointness(skew, 4, q, t));
    }
    return out;
}

std::vector<CheckReport> suite_gram(const VerifyOptions&)
{
    std::vector<CheckReport> out;
    const std::pair<Rational, Rational> samples[] = {{Rational(1, 3), Rational(1, 2)},
                                                     {Rational(-1, 4), Rational(1, 2)},
                                                     {Rational(0), Rational(1)},
                                                     {Rational(9, 10), Rational(1)}};
    for (const auto& [q, t] : samples) {
        out.push_back(check_gram_positivity(identity_gram(1), 4, q, t));
        out.push_back(check_gram_positivity(identity_gram(2), 4, q, t));
    }
    return out;
}

std::vector<CheckReport> suite_cards(const VerifyOptions& o)
{
    std::vector<CheckReport> out;
    for (const auto& [mode, gauge] : kPairings) {
        CheckReport r{std::string("card bijection and weights (") + to_string(gauge) + ")"};
        for (int n = 1; n <= std::min(o.n_max, 7); ++n) {
            std::map<std::vector<int>, int> seen;
            for (const auto& w : contributors(n)) {
                Polynomial word_total;
                for (const auto& a : expand_arrangements(w, gauge)) {
                    ++seen[a.partition.rgs()];
                    word_total += a.weight;
                    Monomial m;
                    m.set(Var::Lambda, static_cast<unsigned>(a.partition.block_count()));
                    m.set(Var::Q, static_cast<unsigned>(restricted_crossings(a.partition)));
                    m.set(Var::T, static_cast<unsigned>(restricted_nestings(a.partition, mode)));
                    ++r.checked;
                    if (a.weight != Polynomial::term(1, m)) r.fail("weight mismatch on " + w.to_string());
                }
                ++r.checked;
                if (word_total != vacuum_expectation_word(w, gauge)) r.fail("word sum mismatch on " + w.to_string());
            }
            std::size_t total = 0;
            enumerate_partitions(n, [&](const SetPartition& p) {
                ++total;
                auto it = seen.find(p.rgs());
                if (it == seen.end() || it->second != 1) r.fail("partition not hit exactly once at n=" + std::to_string(n));
            });
            ++r.checked;
            if (seen.size() != total) r.fail("arrangements produce foreign partitions at n=" + std::to_string(n));
        }
        out.push_back(std::move(r));
    }
    CheckReport comp{"intermediate card equals annihilation then creation"};
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= i; ++j) {
            ++comp.checked;
            if (!intermediate_matches_split(i, j)) comp.fail("I_" + std::to_string(i) + "^" + std::to_string(j));
        }
    }
    out.push_back(std::move(comp));
    return out;
}

std::vector<CheckReport> suite_poisson(const VerifyOptions&)
{
    return {poisson_limit_check(6, Rational(1), {10, 100, 1000}, Rational(1, 3), Rational(2, 3)).report};
}

std::vector<CheckReport> suite_cfrac(const VerifyOptions&)
{
    CheckReport r{"J-fraction equals Motzkin moments"};
    const JacobiParams presets[] = {charlier_strict(), charlier_tgauge(), q_charlier(), ejsmont(),
                                    binomial(Polynomial(5), Polynomial::variable(Var::Lambda))};
    for (const auto& j : presets) {
        const auto motzkin = motzkin_moment_sequence(j, 12);
        const auto series = jfraction_series(j, 12);
        const auto cf = cf_series(cf_spec(j, default_depth(12)), 12);
        ++r.checked;
        if (series != motzkin || cf != motzkin) r.fail(j.name);
    }
    return {r};
}

const std::map<std::string, Suite>& suites()
{
    static const std::map<std::string, Suite> table{
        {"moments", suite_moments},         {"tables", suite_tables},
        {"charlier", suite_charlier},       {"orthogonality", suite_orthogonality},
        {"fock", suite_fock},               {"specialization", suite_specialization},
        {"inner", suite_inner},             {"commutation", suite_commutation},
        {"adjointness", suite_adjointness}, {"gram", suite_gram},
        {"cards", suite_cards},             {"poisson", suite_poisson},
        {"cfrac", suite_cfrac},
    };
    return table;
}

}  // namespace

std::vector<std::string> verify_suite_names()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : suites()) names.push_back(name);
    return names;
}

std::vector<CheckReport> run_verification(const VerifyOptions& options)
{
    std::set<std::string> wanted(options.suites.begin(), options.suites.end());
    const bool everything = wanted.count("all") > 0;
    for (const auto& name : wanted) {
        if (name != "all" && suites().count(name) == 0) throw Error("unknown verification suite \"" + name + "\"");
    }
    std::vector<CheckReport> out;
    for (const auto& [name, fn] : suites()) {
        if (!everything && wanted.count(name) == 0) continue;
        for (auto& r : fn(options)) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace qtmoments
