#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtmoments/fock.hpp"
#include "qtmoments/partitions.hpp"
#include "qtmoments/ring.hpp"

namespace qtmoments {

class NotContributor : public Error {
public:
    using Error::Error;
};

enum class CardKind { Creation, Annihilation, Intermediate, Singleton };

/// One card at level i; choice j (1..i) selects the open line, counted from
/// the bottom, that an annihilation or intermediate card grounds.
struct Card {
    CardKind kind;
    int level;
    int choice = 0;

    /// s, s t^{i-j} q^{j-1}, t^{i-j} q^{j-1}, and lambda (Identity) or lambda t^i (TPowerN).
    Polynomial weight(ScalarGauge gauge) const;
    /// "C0", "A2_1", "I2_1", "S2".
    std::string label() const;

    bool operator==(const Card&) const = default;
};

struct CardArrangement {
    OperatorWord word;
    std::vector<Card> cards;  // one per factor, in application order Z_1, Z_2, ...
    Polynomial weight;        // s-free
    SetPartition partition;
};

/// Every contributor of length n, each once. Words are generated in
/// application order with letters tried as C, A, N, S at each site.
void enumerate_contributors(int n, const std::function<void(const OperatorWord&)>& visit);
std::vector<OperatorWord> contributors(int n);

/// All admissible arrangements of a contributor; throws NotContributor.
std::vector<CardArrangement> expand_arrangements(const OperatorWord& w, ScalarGauge gauge);

/// Partition induced by a card sequence by concatenating lines.
SetPartition partition_from_cards(const std::vector<Card>& cards);

/// Sum of arrangement weights over every contributor of length n.
Polynomial moment_by_cards(int n, ScalarGauge gauge, unsigned workers = 1);

/// Line bookkeeping behind one card: given open lines bottom-to-top, the lines
/// leaving the card bottom-to-top. The grounded or newly started line is
/// reported through `ground`.
struct LineFlow {
    std::vector<int> out;
    int ground = -1;
};
LineFlow flow_through(const Card& card, const std::vector<int>& in, int new_line);

/// Checks that an intermediate card I_i^(j) routes lines exactly like A_i^(j)
/// followed by C_{i-1} with the two ground points identified, and that their
/// weights agree at lambda = 1.
bool intermediate_matches_split(int level, int choice);

}  // namespace qtmoments
