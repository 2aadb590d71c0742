#pragma once

// Internal helpers shared by the analysis modules.

#include "dqa/digraph.hpp"
#include "dqa/graph.hpp"
#include "dqa/simplex_store.hpp"

#include <numeric>
#include <span>
#include <vector>

namespace dqa::detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // The smaller root wins so labels stay deterministic.
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a < b) {
            parent_[b] = a;
        } else if (b < a) {
            parent_[a] = b;
        }
    }

    /// Classes ascending, ordered by smallest member.
    std::vector<std::vector<NodeId>> classes() {
        std::vector<std::vector<NodeId>> by_root(parent_.size());
        for (std::size_t x = 0; x < parent_.size(); ++x) {
            by_root[find(x)].push_back(static_cast<NodeId>(x));
        }
        std::vector<std::vector<NodeId>> out;
        for (auto& c : by_root) {
            if (!c.empty()) {
                out.push_back(std::move(c));
            }
        }
        return out;
    }

private:
    std::vector<std::size_t> parent_;
};

/// Calls f(subsequence) for every length-`size` subsequence of `tuple`, in
/// lexicographic order of the chosen positions.
template <typename F>
void for_each_subsequence(std::span<const Vertex> tuple, std::size_t size, F&& f) {
    const std::size_t n = tuple.size();
    if (size > n) {
        return;
    }
    std::vector<std::size_t> pos(size);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<Vertex> sub(size);
    while (true) {
        for (std::size_t k = 0; k < size; ++k) {
            sub[k] = tuple[pos[k]];
        }
        f(std::span<const Vertex>(sub));
        std::size_t k = size;
        while (k > 0 && pos[k - 1] == n - size + (k - 1)) {
            --k;
        }
        if (k == 0) {
            return;
        }
        ++pos[k - 1];
        for (std::size_t m = k; m < size; ++m) {
            pos[m] = pos[m - 1] + 1;
        }
    }
}

/// Node numbering of K_q: dimension q first, then q+1, ...
class LevelOffsets {
public:
    LevelOffsets(const SimplexStore& store, int q) : q_(q) {
        std::size_t acc = 0;
        for (int d = q; d <= store.dim(); ++d) {
            offsets_.push_back(acc);
            acc += store.count(d);
        }
        offsets_.push_back(acc);
    }

    int q() const noexcept { return q_; }
    int top() const noexcept { return q_ + static_cast<int>(offsets_.size()) - 2; }
    std::size_t size() const noexcept { return offsets_.back(); }
    NodeId node(int d, SimplexIndex i) const {
        return static_cast<NodeId>(offsets_[static_cast<std::size_t>(d - q_)] + i);
    }
    SimplexId simplex(NodeId node) const {
        std::size_t k = 0;
        while (offsets_[k + 1] <= node) {
            ++k;
        }
        return {q_ + static_cast<int>(k), static_cast<SimplexIndex>(node - offsets_[k])};
    }

private:
    int q_;
    std::vector<std::size_t> offsets_;
};

}  // namespace dqa::detail
