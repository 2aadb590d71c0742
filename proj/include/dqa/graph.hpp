#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dqa {

using NodeId = std::uint32_t;
using NodeEdge = std::pair<NodeId, NodeId>;

/// Immutable adjacency in compressed-row form; successor lists ascending, no duplicates.
class CsrGraph {
public:
    CsrGraph() = default;
    CsrGraph(std::size_t num_nodes, std::vector<NodeEdge> edges);

    std::size_t size() const noexcept { return offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return targets_.size(); }

    std::span<const NodeId> successors(NodeId v) const {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    bool has_edge(NodeId u, NodeId v) const;

    /// All edges in (source, target) order.
    std::vector<NodeEdge> edges() const;
    CsrGraph reversed() const;

    bool operator==(const CsrGraph&) const = default;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
};

struct SccPartition {
    /// Component index of each node.
    std::vector<NodeId> component_of;
    /// Members of each component, ascending; components ordered by smallest member.
    std::vector<std::vector<NodeId>> components;
};

/// Strongly connected components (iterative Tarjan).
SccPartition strongly_connected_components(const CsrGraph& g);

/// A topological order, or nullopt when the graph has a directed cycle.
std::optional<std::vector<NodeId>> topological_order(const CsrGraph& g);

/// Breadth-first distances from `source`; unreachable nodes get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const CsrGraph& g, NodeId source);

}  // namespace dqa
