#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qtmoments/ring.hpp"

namespace qtmoments {

enum class NestingMode { Strict, CoveredSingleton };

const char* to_string(NestingMode mode);

struct Arc {
    int left;
    int right;
    bool operator==(const Arc&) const = default;
};

/// Arcs join consecutive elements of each block; elements are 1-based.
struct ArcDiagram {
    std::vector<Arc> arcs;
    std::vector<int> singletons;
};

/// A partition of {1..n} stored as its restricted growth string.
class SetPartition {
public:
    /// Throws Error unless rgs is a restricted growth string of positive length.
    explicit SetPartition(std::vector<int> rgs);
    /// Blocks of 1-based elements, in any order; must cover {1..n} exactly once.
    static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);

    int size() const { return static_cast<int>(rgs_.size()); }
    const std::vector<int>& rgs() const { return rgs_; }
    int block_count() const;
    /// Blocks ordered by their least element, each sorted ascending.
    std::vector<std::vector<int>> blocks() const;
    ArcDiagram arc_diagram() const;

    bool operator==(const SetPartition&) const = default;
    auto operator<=>(const SetPartition& other) const { return rgs_ <=> other.rgs_; }

private:
    std::vector<int> rgs_;
};

/// Visits every partition of {1..n} once, in lexicographic rgs order.
void enumerate_partitions(int n, const std::function<void(const SetPartition&)>& visit);

/// Visits the partitions whose rgs starts with `prefix`, in lexicographic order.
void enumerate_partitions_with_prefix(int n, const std::vector<int>& prefix,
                                      const std::function<void(const SetPartition&)>& visit);

/// Every valid rgs prefix of the given length, lexicographically sorted.
std::vector<std::vector<int>> rgs_prefixes(int length);

int restricted_crossings(const SetPartition& p);
int restricted_nestings(const SetPartition& p, NestingMode mode);

/// sum over partitions of lambda^{blocks} q^{rc} t^{rn(mode)}.
Polynomial moment_by_partitions(int n, NestingMode mode, unsigned workers = 1);

}  // namespace qtmoments
