#pragma once

#include "dqa/classic.hpp"
#include "dqa/flag_complex.hpp"
#include "dqa/graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dqa {

/// The triple (q, d̂_i, d̂_j).
struct ConnectionSpec {
    int q = 0;
    std::size_t i = 0;
    std::size_t j = 0;

    auto operator<=>(const ConnectionSpec&) const = default;
};

/// "(q,i,j)"
std::string to_string(const ConnectionSpec& spec);

/**
 * Ordered (q,i,j)-nearness of (a, b): a is an ordered face of b (a == b
 * included), or some q-simplex is an ordered subsequence of both
 * face_hat(a, i) and face_hat(b, j). False when either has dimension < q.
 */
bool directed_q_near(std::span<const Vertex> a, std::span<const Vertex> b, const ConnectionSpec& spec);
inline bool directed_q_near(const OrderedSimplex& a, const OrderedSimplex& b, const ConnectionSpec& spec) {
    return directed_q_near(a.vertices(), b.vertices(), spec);
}

enum class EdgeStrategy {
    Automatic,  // indexed
    Indexed,    // q-face buckets of the face_hat images
    AllPairs,   // every ordered pair; only honoured below kAllPairsLimit nodes
};

inline constexpr std::size_t kAllPairsLimit = 5'000;

/**
 * Digraph over K_q whose edges are the nearness pairs with a != b. Node ids
 * run through K_q by dimension then position. Keeps a pointer to the
 * complex, which must outlive it.
 */
class ConnectivityDigraph {
public:
    ConnectivityDigraph() = default;
    ConnectivityDigraph(const DirectedFlagComplex& complex, ConnectionSpec spec, CsrGraph graph);

    const ConnectionSpec& spec() const noexcept { return spec_; }
    const DirectedFlagComplex& complex() const noexcept { return *complex_; }
    const CsrGraph& graph() const noexcept { return graph_; }
    std::size_t size() const noexcept { return graph_.size(); }
    std::size_t num_edges() const noexcept { return graph_.num_edges(); }

    SimplexId simplex_id(NodeId node) const;
    std::span<const Vertex> simplex(NodeId node) const { return complex_->simplex(simplex_id(node)); }
    std::optional<NodeId> node_of(SimplexId id) const;
    std::optional<NodeId> node_of(std::span<const Vertex> tuple) const;

private:
    const DirectedFlagComplex* complex_ = nullptr;
    ConnectionSpec spec_;
    std::vector<std::size_t> offsets_{0};
    CsrGraph graph_;
};

struct DigraphOptions {
    EdgeStrategy strategy = EdgeStrategy::Automatic;
    /// Threads over buckets (0 = hardware concurrency).
    unsigned workers = 1;
};

/// Throws std::invalid_argument for q < 0.
ConnectivityDigraph build_connectivity_digraph(const DirectedFlagComplex& complex, const ConnectionSpec& spec,
                                               const DigraphOptions& options = {});

/// Strongly connected components and the acyclic quotient between them.
struct Condensation {
    SccPartition scc;
    CsrGraph dag;

    std::size_t size() const noexcept { return dag.size(); }
    const std::vector<NodeId>& members(NodeId component) const { return scc.components[component]; }
};

/// Throws std::logic_error if the quotient is not acyclic.
Condensation condense(const CsrGraph& g);
inline Condensation condense(const ConnectivityDigraph& g) { return condense(g.graph()); }

/// Directed variant: top simplices must be mutually reachable along
/// (n-1, d̂_i, d̂_j); boundary lists the (n-1)-simplices with one coface.
PseudomanifoldCertificate directed_pseudomanifold_check(const DirectedFlagComplex& complex, int n, std::size_t i,
                                                        std::size_t j);

/**
 * Every triple of the first structure map of a complex of dimension D:
 * q in 0..D-1 with i, j in 0..D, then (D, 0, 0). Digraphs are built on demand.
 */
class StructureMap {
public:
    explicit StructureMap(const DirectedFlagComplex& complex);

    /// D^3 + 2D^2 + D + 1
    std::size_t size() const noexcept { return specs_.size(); }
    const std::vector<ConnectionSpec>& specs() const noexcept { return specs_; }
    ConnectivityDigraph operator[](std::size_t k) const { return build_connectivity_digraph(*complex_, specs_.at(k)); }

    class iterator {
    public:
        using value_type = ConnectivityDigraph;
        using difference_type = std::ptrdiff_t;

        iterator(const StructureMap* map, std::size_t k) : map_(map), k_(k) {}
        ConnectivityDigraph operator*() const { return (*map_)[k_]; }
        iterator& operator++() {
            ++k_;
            return *this;
        }
        bool operator==(const iterator&) const = default;

    private:
        const StructureMap* map_;
        std::size_t k_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, specs_.size()}; }

private:
    const DirectedFlagComplex* complex_;
    std::vector<ConnectionSpec> specs_;
};

}  // namespace dqa
