#pragma once

#include "dqa/digraph.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dqa {

using SimplexIndex = std::uint32_t;

/// A simplex addressed by (dimension, position in that dimension's sorted list).
struct SimplexId {
    int dim = 0;
    SimplexIndex index = 0;

    auto operator<=>(const SimplexId&) const = default;
};

/**
 * Per-dimension vertex tuples in flat arrays (stride dim+1), each level
 * sorted lexicographically and free of duplicates. Shared storage for ordered
 * and unordered complexes; tuples are compared as given.
 */
class SimplexStore {
public:
    SimplexStore() = default;

    /// `levels[d]` holds the concatenated (d+1)-tuples of dimension d; they are
    /// sorted and deduplicated here. Trailing empty levels are dropped.
    explicit SimplexStore(std::vector<std::vector<Vertex>> levels);

    /// Highest non-empty dimension, -1 when empty.
    int dim() const noexcept { return static_cast<int>(levels_.size()) - 1; }

    std::size_t count(int d) const noexcept {
        return d < 0 || d > dim() ? 0 : levels_[static_cast<std::size_t>(d)].size() / static_cast<std::size_t>(d + 1);
    }

    std::vector<std::size_t> counts() const;
    std::size_t total() const;

    std::span<const Vertex> at(int d, SimplexIndex i) const {
        const auto width = static_cast<std::size_t>(d + 1);
        return {levels_[static_cast<std::size_t>(d)].data() + width * i, width};
    }
    std::span<const Vertex> at(SimplexId id) const { return at(id.dim, id.index); }

    /// Binary search for an exact tuple.
    std::optional<SimplexIndex> find(std::span<const Vertex> tuple) const;

    const std::vector<Vertex>& level(int d) const { return levels_.at(static_cast<std::size_t>(d)); }

    bool operator==(const SimplexStore&) const = default;

private:
    std::vector<std::vector<Vertex>> levels_;
};

/// Sorts the fixed-width tuples of `flat` lexicographically and removes duplicates.
void sort_unique_tuples(std::vector<Vertex>& flat, std::size_t width);

}  // namespace dqa
