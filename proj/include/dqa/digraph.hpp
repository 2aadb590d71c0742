#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dqa {

using Vertex = std::uint32_t;

struct Edge {
    Vertex source = 0;
    Vertex target = 0;

    auto operator<=>(const Edge&) const = default;
};

/**
 * Simple directed graph without loops on the dense vertex set 0..n-1.
 *
 * Reciprocal pairs (v,w), (w,v) may both be present. Duplicate edges are
 * collapsed on construction; a loop or an out-of-range endpoint throws
 * std::invalid_argument. Immutable after construction.
 */
class Digraph {
public:
    Digraph() = default;
    Digraph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    /// Edges sorted by (source, target).
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Ascending targets of edges leaving v.
    std::span<const Vertex> out_neighbors(Vertex v) const;
    /// Ascending sources of edges entering v.
    std::span<const Vertex> in_neighbors(Vertex v) const;

    bool has_edge(Vertex source, Vertex target) const;

    bool operator==(const Digraph& other) const {
        return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Vertex> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Vertex> in_sources_;
};

/// A digraph whose dense ids were assigned from external vertex labels.
/// `labels[v]` is the external token that became vertex v.
struct LabeledDigraph {
    Digraph graph;
    std::vector<std::string> labels;
};

/**
 * Reads "src dst" pairs of non-negative integers, one per line. Blank lines
 * and '#' comments are ignored, duplicates collapse. The vertex count is
 * 1 + the largest id seen unless `num_vertices` overrides it.
 *
 * Throws ParseError (with the line number) on a self-loop, a malformed token,
 * a wrong token count, or an id outside an explicit vertex count.
 */
Digraph load_edge_list(std::istream& in, std::optional<std::size_t> num_vertices = std::nullopt);

/**
 * Like load_edge_list, but vertex tokens are arbitrary strings (sparse
 * integer ids, neuron names, ...). Labels are mapped to dense ids in sorted
 * order: numerically when every label is an integer, lexicographically
 * otherwise.
 */
LabeledDigraph load_labeled_edge_list(std::istream& in);

/**
 * Reads a square 0/1 matrix; rows are lines, entries separated by commas
 * and/or whitespace. Entry (i,j) = 1 means edge i -> j. Throws ParseError on
 * a non-square matrix, a nonzero diagonal entry or a non-binary entry.
 */
Digraph load_adjacency_matrix(std::istream& in);

/// Writes "src dst" lines in edge order, preceded by a "# vertices N" comment.
void write_edge_list(std::ostream& out, const Digraph& g);

/// The underlying undirected graph with every edge oriented from the smaller
/// to the larger id. Its directed flag complex is the ordinary clique complex.
Digraph orient_ascending(const Digraph& g);

}  // namespace dqa
