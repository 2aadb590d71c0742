#pragma once

#include "dqa/flag_complex.hpp"
#include "dqa/simplex_store.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace dqa {

/**
 * Unordered simplicial complex: simplices are vertex sets, stored as
 * ascending tuples per dimension and closed under non-empty subsets.
 */
class SimplicialComplexView {
public:
    SimplicialComplexView() = default;

    /// Closure of the given vertex sets under non-empty subsets. Each set may
    /// be in any order; repeats inside a set throw std::invalid_argument.
    static SimplicialComplexView from_simplices(const std::vector<std::vector<Vertex>>& simplices);

    /// Forgets the ordering: ordered simplices with equal vertex sets collapse.
    static SimplicialComplexView from_directed(const DirectedFlagComplex& c);

    /// Takes face-closed levels of ascending tuples.
    static SimplicialComplexView from_store(SimplexStore store);

    int dim() const noexcept { return store_.dim(); }
    std::size_t count(int d) const noexcept { return store_.count(d); }
    std::vector<std::size_t> counts() const { return store_.counts(); }
    std::size_t total() const { return store_.total(); }

    /// Ascending vertex tuple of simplex (d, i).
    std::span<const Vertex> simplex(int d, SimplexIndex i) const { return store_.at(d, i); }
    std::span<const Vertex> simplex(SimplexId id) const { return store_.at(id); }

    /// Looks up a vertex set given in any order.
    std::optional<SimplexIndex> find(std::span<const Vertex> vertices) const;
    bool contains(std::span<const Vertex> vertices) const { return find(vertices).has_value(); }

    const SimplexStore& store() const noexcept { return store_; }

    bool operator==(const SimplicialComplexView&) const = default;

private:
    SimplexStore store_;
};

/// One simplex per line as whitespace-separated vertex ids; '#' comments and
/// "dim k" headers are skipped. The result is closed under subsets.
SimplicialComplexView read_simplices(std::istream& in);

}  // namespace dqa
