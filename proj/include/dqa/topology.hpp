#pragma once

#include "dqa/flag_complex.hpp"
#include "dqa/graph.hpp"
#include "dqa/simplicial_complex.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace dqa {

/**
 * Finite poset given by a generating strict relation (typically Hasse or
 * condensation edges); the order is its reachability closure. Construction
 * throws std::invalid_argument if the relation has a loop or a cycle.
 */
class Poset {
public:
    Poset() = default;
    explicit Poset(CsrGraph relation);
    Poset(std::size_t size, std::vector<NodeEdge> relation) : Poset(CsrGraph(size, std::move(relation))) {}

    std::size_t size() const noexcept { return relation_.size(); }
    const CsrGraph& relation() const noexcept { return relation_; }
    /// Elements in a topological order of the relation.
    const std::vector<NodeId>& linear_extension() const noexcept { return order_; }

private:
    CsrGraph relation_;
    std::vector<NodeId> order_;
};

/// Length in edges of the longest chain (0 for an antichain or empty poset).
std::size_t poset_height(const Poset& p);

/**
 * Order complex: one simplex per chain x0 < x1 < ... < xk of the reachability
 * order, k <= max_dim. Vertices are the poset elements. Throws GuardExceeded
 * once more than `ceiling` simplices would be produced.
 */
SimplicialComplexView order_complex(const Poset& p, int max_dim = std::numeric_limits<int>::max(),
                                    std::size_t ceiling = 1'000'000);

/**
 * Boundary matrices over the two-element field. Column c of matrix k lists
 * (ascending) the (k-1)-simplices in the boundary of k-simplex c.
 */
class ChainComplexZ2 {
public:
    using Column = std::vector<SimplexIndex>;

    static ChainComplexZ2 from(const SimplicialComplexView& k);
    /// Ordered (semi-simplicial) chain complex: the boundary of a simplex is
    /// the sum of its face-map images.
    static ChainComplexZ2 from(const DirectedFlagComplex& k);

    int dim() const noexcept { return static_cast<int>(cells_.size()) - 1; }
    std::size_t cells(int k) const { return k < 0 || k > dim() ? 0 : cells_[static_cast<std::size_t>(k)]; }
    /// Boundary columns of the k-simplices (empty for k = 0).
    const std::vector<Column>& boundary(int k) const { return boundaries_.at(static_cast<std::size_t>(k)); }

    /// Rank of the k-th boundary map over Z2 (0 outside 1..dim).
    std::size_t rank(int k) const;

    /// True iff every composite of consecutive boundary maps vanishes.
    bool boundary_squares_to_zero() const;

private:
    static ChainComplexZ2 from_store(const SimplexStore& store);

    std::vector<std::size_t> cells_;
    std::vector<std::vector<Column>> boundaries_;
};

/// Unreduced Betti numbers b_0..b_{up_to} over Z2.
std::vector<std::size_t> betti_z2(const ChainComplexZ2& chains, int up_to);
std::vector<std::size_t> betti_z2(const SimplicialComplexView& k, int up_to);
std::vector<std::size_t> betti_z2(const DirectedFlagComplex& k, int up_to);

/// Alternating sum of cell counts.
long long euler_characteristic(const std::vector<std::size_t>& counts);

}  // namespace dqa
