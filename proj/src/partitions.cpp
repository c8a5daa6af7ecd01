#include "qtmoments/partitions.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qtmoments/parallel.hpp"

namespace qtmoments {

const char* to_string(NestingMode mode)
{
    return mode == NestingMode::Strict ? "strict" : "covered";
}

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs))
{
    if (rgs_.empty()) throw Error("a set partition needs at least one element");
    int max = -1;
    for (int v : rgs_) {
        if (v < 0 || v > max + 1) throw Error("not a restricted growth string");
        max = std::max(max, v);
    }
}

SetPartition SetPartition::from_blocks(const std::vector<std::vector<int>>& blocks)
{
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    std::vector<int> owner(n + 1, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].empty()) throw Error("empty block");
        for (int e : blocks[i]) {
            if (e < 1 || e > n || owner[e] != -1) throw Error("blocks do not partition {1..n}");
            owner[e] = static_cast<int>(i);
        }
    }
    std::vector<int> relabel(blocks.size(), -1);
    std::vector<int> rgs;
    rgs.reserve(n);
    int next = 0;
    for (int e = 1; e <= n; ++e) {
        int& label = relabel[owner[e]];
        if (label < 0) label = next++;
        rgs.push_back(label);
    }
    return SetPartition(std::move(rgs));
}

int SetPartition::block_count() const
{
    return 1 + *std::max_element(rgs_.begin(), rgs_.end());
}

std::vector<std::vector<int>> SetPartition::blocks() const
{
    std::vector<std::vector<int>> out(block_count());
    for (int i = 0; i < size(); ++i) out[rgs_[i]].push_back(i + 1);
    return out;
}

ArcDiagram SetPartition::arc_diagram() const
{
    ArcDiagram d;
    for (const auto& b : blocks()) {
        if (b.size() == 1) d.singletons.push_back(b.front());
        for (std::size_t j = 0; j + 1 < b.size(); ++j) d.arcs.push_back({b[j], b[j + 1]});
    }
    std::sort(d.arcs.begin(), d.arcs.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.left, a.right) < std::tie(b.left, b.right); });
    std::sort(d.singletons.begin(), d.singletons.end());
    return d;
}

namespace {

// Advances a[from..n) to the next restricted growth string; false when done.
// maxes[i] holds max(a[0..i]).
bool next_rgs(std::vector<int>& a, std::vector<int>& maxes, std::size_t from)
{
    const std::size_t n = a.size();
    for (std::size_t i = n; i-- > from;) {
        if (i == 0) return false;
        if (a[i] <= maxes[i - 1]) {
            ++a[i];
            maxes[i] = std::max(maxes[i - 1], a[i]);
            for (std::size_t k = i + 1; k < n; ++k) {
                a[k] = 0;
                maxes[k] = maxes[k - 1];
            }
            return true;
        }
    }
    return false;
}

}  // namespace

void enumerate_partitions_with_prefix(int n, const std::vector<int>& prefix,
                                      const std::function<void(const SetPartition&)>& visit)
{
    if (n < 1 || static_cast<int>(prefix.size()) > n) return;
    std::vector<int> a(n, 0), maxes(n, 0);
    int max = -1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i] < 0 || prefix[i] > max + 1) return;
        a[i] = prefix[i];
        max = std::max(max, a[i]);
        maxes[i] = max;
    }
    for (std::size_t i = prefix.size(); i < a.size(); ++i) maxes[i] = std::max(i == 0 ? 0 : maxes[i - 1], 0);
    const std::size_t from = std::max<std::size_t>(prefix.size(), 1);
    do {
        visit(SetPartition(a));
    } while (next_rgs(a, maxes, from));
}

void enumerate_partitions(int n, const std::function<void(const SetPartition&)>& visit)
{
    enumerate_partitions_with_prefix(n, {}, visit);
}

std::vector<std::vector<int>> rgs_prefixes(int length)
{
    std::vector<std::vector<int>> out;
    if (length <= 0) {
        out.emplace_back();
        return out;
    }
    enumerate_partitions(length, [&](const SetPartition& p) { out.push_back(p.rgs()); });
    return out;
}

int restricted_crossings(const SetPartition& p)
{
    const auto arcs = p.arc_diagram().arcs;
    int count = 0;
    for (const Arc& x : arcs) {
        for (const Arc& y : arcs) {
            if (x.left < y.left && y.left < x.right && x.right < y.right) ++count;
        }
    }
    return count;
}

int restricted_nestings(const SetPartition& p, NestingMode mode)
{
    const auto diagram = p.arc_diagram();
    int count = 0;
    for (const Arc& outer : diagram.arcs) {
        for (const Arc& inner : diagram.arcs) {
            if (outer.left < inner.left && inner.right < outer.right) ++count;
        }
        if (mode == NestingMode::CoveredSingleton) {
            for (int e : diagram.singletons) {
                if (outer.left < e && e < outer.right) ++count;
            }
        }
    }
    return count;
}

namespace {

using StatCounts = std::map<std::tuple<int, int, int>, long long>;

Polynomial to_polynomial(const StatCounts& counts)
{
    Polynomial p;
    for (const auto& [key, count] : counts) {
        const auto& [blocks, rc, rn] = key;
        Monomial m;
        m.set(Var::Lambda, blocks);
        m.set(Var::Q, rc);
        m.set(Var::T, rn);
        p.add_term(Integer(static_cast<long>(count)), m);
    }
    return p;
}

}  // namespace

Polynomial moment_by_partitions(int n, NestingMode mode, unsigned workers)
{
    if (n < 1) throw Error("moment_by_partitions needs n >= 1");
    const int split = std::min(n, 4);
    const auto prefixes = rgs_prefixes(split);
    auto parts = run_units<StatCounts>(prefixes.size(), workers, [&](std::size_t i) {
        StatCounts local;
        enumerate_partitions_with_prefix(n, prefixes[i], [&](const SetPartition& p) {
            ++local[{p.block_count(), restricted_crossings(p), restricted_nestings(p, mode)}];
        });
        return local;
    });
    StatCounts total;
    for (const auto& part : parts) {
        for (const auto& [key, count] : part) total[key] += count;
    }
    return to_polynomial(total);
}

}  // namespace qtmoments
