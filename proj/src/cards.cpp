#include "qtmoments/cards.hpp"

#include <functional>
#include <map>
#include <tuple>

#include "qtmoments/parallel.hpp"

namespace qtmoments {

namespace {

// Exponents of s, q, t, lambda carried by a card.
struct WeightExps {
    unsigned s = 0, q = 0, t = 0, lambda = 0;

    WeightExps& operator+=(const WeightExps& o)
    {
        s += o.s;
        q += o.q;
        t += o.t;
        lambda += o.lambda;
        return *this;
    }
};

WeightExps card_exps(CardKind kind, int level, int choice, ScalarGauge gauge)
{
    WeightExps w;
    switch (kind) {
    case CardKind::Creation:
        w.s = 1;
        break;
    case CardKind::Annihilation:
        w.s = 1;
        [[fallthrough]];
    case CardKind::Intermediate:
        w.t = static_cast<unsigned>(level - choice);
        w.q = static_cast<unsigned>(choice - 1);
        break;
    case CardKind::Singleton:
        w.lambda = 1;
        if (gauge == ScalarGauge::TPowerN) w.t = static_cast<unsigned>(level);
        break;
    }
    return w;
}

Monomial to_monomial(const WeightExps& w, bool resolve)
{
    Monomial m;
    m.set(Var::Q, w.q);
    m.set(Var::T, w.t);
    if (resolve) {
        m.set(Var::Lambda, w.lambda + w.s / 2);
    } else {
        m.set(Var::Lambda, w.lambda);
        m.set(Var::S, w.s);
    }
    return m;
}

CardKind kind_of(OperatorLetter l)
{
    switch (l) {
    case OperatorLetter::Creation: return CardKind::Creation;
    case OperatorLetter::Annihilation: return CardKind::Annihilation;
    case OperatorLetter::Number: return CardKind::Intermediate;
    case OperatorLetter::Scalar: return CardKind::Singleton;
    }
    return CardKind::Singleton;
}

bool has_choice(CardKind k)
{
    return k == CardKind::Annihilation || k == CardKind::Intermediate;
}

}  // namespace

Polynomial Card::weight(ScalarGauge gauge) const
{
    return Polynomial::term(1, to_monomial(card_exps(kind, level, choice, gauge), false));
}

std::string Card::label() const
{
    switch (kind) {
    case CardKind::Creation: return "C" + std::to_string(level);
    case CardKind::Annihilation: return "A" + std::to_string(level) + "_" + std::to_string(choice);
    case CardKind::Intermediate: return "I" + std::to_string(level) + "_" + std::to_string(choice);
    case CardKind::Singleton: return "S" + std::to_string(level);
    }
    return "?";
}

void enumerate_contributors(int n, const std::function<void(const OperatorWord&)>& visit)
{
    if (n < 0) return;
    std::vector<OperatorLetter> applied;
    applied.reserve(n);
    static constexpr OperatorLetter kOrder[] = {OperatorLetter::Creation, OperatorLetter::Annihilation,
                                                OperatorLetter::Number, OperatorLetter::Scalar};
    std::function<void(int)> extend = [&](int level) {
        const int remaining = n - static_cast<int>(applied.size());
        if (remaining == 0) {
            if (level == 0) visit(OperatorWord::from_applied(applied));
            return;
        }
        for (OperatorLetter l : kOrder) {
            int next = level;
            if (l == OperatorLetter::Creation) next = level + 1;
            if (l == OperatorLetter::Annihilation) next = level - 1;
            if (next < 0 || next > remaining - 1) continue;
            if (l == OperatorLetter::Number && level < 1) continue;
            applied.push_back(l);
            extend(next);
            applied.pop_back();
        }
    };
    extend(0);
}

std::vector<OperatorWord> contributors(int n)
{
    std::vector<OperatorWord> out;
    enumerate_contributors(n, [&](const OperatorWord& w) { out.push_back(w); });
    return out;
}

LineFlow flow_through(const Card& card, const std::vector<int>& in, int new_line)
{
    if (static_cast<int>(in.size()) != card.level) throw Error("card level does not match open lines");
    LineFlow f;
    const auto j = static_cast<std::size_t>(card.choice);
    switch (card.kind) {
    case CardKind::Creation:
        f.out.push_back(new_line);
        f.out.insert(f.out.end(), in.begin(), in.end());
        f.ground = new_line;
        break;
    case CardKind::Annihilation:
        f.ground = in[j - 1];
        f.out = in;
        f.out.erase(f.out.begin() + static_cast<std::ptrdiff_t>(j - 1));
        break;
    case CardKind::Intermediate:
        f.ground = in[j - 1];
        f.out.push_back(in[j - 1]);
        f.out.insert(f.out.end(), in.begin(), in.begin() + static_cast<std::ptrdiff_t>(j - 1));
        f.out.insert(f.out.end(), in.begin() + static_cast<std::ptrdiff_t>(j), in.end());
        break;
    case CardKind::Singleton:
        f.out = in;
        f.ground = new_line;
        break;
    }
    return f;
}

SetPartition partition_from_cards(const std::vector<Card>& cards)
{
    std::vector<int> open;
    std::vector<std::vector<int>> blocks;
    for (std::size_t site = 0; site < cards.size(); ++site) {
        const int fresh = static_cast<int>(blocks.size());
        LineFlow f = flow_through(cards[site], open, fresh);
        if (f.ground == fresh) blocks.emplace_back();
        blocks[f.ground].push_back(static_cast<int>(site) + 1);
        open = std::move(f.out);
    }
    if (!open.empty()) throw Error("card sequence leaves open lines");
    return SetPartition::from_blocks(blocks);
}

std::vector<CardArrangement> expand_arrangements(const OperatorWord& w, ScalarGauge gauge)
{
    if (!w.is_contributor()) throw NotContributor("\"" + w.to_string() + "\" is not a contributor");
    const auto levels = w.levels();
    const std::size_t n = w.length();
    std::vector<Card> cards(n);
    for (std::size_t k = 1; k <= n; ++k) {
        CardKind kind = kind_of(w.factor(k));
        cards[k - 1] = Card{kind, levels[k - 1], has_choice(kind) ? 1 : 0};
    }
    std::vector<CardArrangement> out;
    // Odometer over the choices of annihilation and intermediate cards.
    for (;;) {
        Polynomial weight(1);
        for (const Card& c : cards) weight *= c.weight(gauge);
        out.push_back(CardArrangement{w, cards, weight.resolve_half_powers(), partition_from_cards(cards)});
        std::size_t k = n;
        while (k > 0) {
            Card& c = cards[k - 1];
            if (has_choice(c.kind) && c.choice < c.level) {
                ++c.choice;
                break;
            }
            if (has_choice(c.kind)) c.choice = 1;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

namespace {

using ExpCounts = std::map<std::tuple<unsigned, unsigned, unsigned>, long long>;

// Sums the weights of every arrangement of w, resolving s^2 = lambda.
void accumulate_word(const OperatorWord& w, ScalarGauge gauge, ExpCounts& counts)
{
    const auto levels = w.levels();
    const std::size_t n = w.length();
    std::function<void(std::size_t, WeightExps)> site = [&](std::size_t k, WeightExps acc) {
        if (k > n) {
            Monomial m = to_monomial(acc, true);
            ++counts[{m[Var::Lambda], m[Var::Q], m[Var::T]}];
            return;
        }
        const CardKind kind = kind_of(w.factor(k));
        const int level = levels[k - 1];
        if (!has_choice(kind)) {
            WeightExps next = acc;
            next += card_exps(kind, level, 0, gauge);
            site(k + 1, next);
            return;
        }
        for (int j = 1; j <= level; ++j) {
            WeightExps next = acc;
            next += card_exps(kind, level, j, gauge);
            site(k + 1, next);
        }
    };
    site(1, WeightExps{});
}

}  // namespace

Polynomial moment_by_cards(int n, ScalarGauge gauge, unsigned workers)
{
    if (n < 0) throw Error("moment order must be non-negative");
    const auto words = contributors(n);
    const std::size_t units = std::min<std::size_t>(words.size(), 64);
    auto parts = run_units<ExpCounts>(units, workers, [&](std::size_t u) {
        ExpCounts local;
        for (std::size_t i = u; i < words.size(); i += units) accumulate_word(words[i], gauge, local);
        return local;
    });
    ExpCounts total;
    for (const auto& part : parts) {
        for (const auto& [key, c] : part) total[key] += c;
    }
    Polynomial p;
    for (const auto& [key, c] : total) {
        const auto& [lambda, q, t] = key;
        Monomial m;
        m.set(Var::Lambda, lambda);
        m.set(Var::Q, q);
        m.set(Var::T, t);
        p.add_term(Integer(static_cast<long>(c)), m);
    }
    return p;
}

bool intermediate_matches_split(int level, int choice)
{
    if (level < 1 || choice < 1 || choice > level) return false;
    std::vector<int> in(level);
    for (int i = 0; i < level; ++i) in[i] = i;
    const Card inter{CardKind::Intermediate, level, choice};
    const Card ann{CardKind::Annihilation, level, choice};
    const Card cre{CardKind::Creation, level - 1};
    const LineFlow direct = flow_through(inter, in, -1);
    const LineFlow closed = flow_through(ann, in, -1);
    // The creation starts its line where the annihilation grounded one.
    const LineFlow reopened = flow_through(cre, closed.out, closed.ground);
    if (direct.out != reopened.out || direct.ground != reopened.ground) return false;
    const Polynomial split_weight = (ann.weight(ScalarGauge::Identity) * cre.weight(ScalarGauge::Identity))
                                        .resolve_half_powers()
                                        .substitute(Var::Lambda, Polynomial(1));
    return split_weight == inter.weight(ScalarGauge::Identity);
}

}  // namespace qtmoments
