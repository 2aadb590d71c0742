#pragma once

#include "dqa/digraph.hpp"
#include "dqa/graph.hpp"
#include "dqa/rational.hpp"
#include "dqa/simplicial_complex.hpp"
#include "dqa/topology.hpp"

#include <Eigen/Core>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dqa {

/// Classical q-nearness: the two vertex sets share at least q+1 vertices.
bool q_near(std::span<const Vertex> a, std::span<const Vertex> b, int q);

/**
 * Undirected q-graph over K_q (all simplices of dimension >= q). Node ids run
 * through K_q by dimension, then by position within the dimension.
 * Edges are stored once as (smaller id, larger id), sorted.
 */
struct QGraph {
    int q = 0;
    std::vector<SimplexId> nodes;
    std::vector<NodeEdge> edges;

    std::size_t size() const noexcept { return nodes.size(); }
    std::optional<NodeId> node_of(SimplexId id) const;
};

enum class QGraphMethod {
    Automatic,  // incidence product below the size threshold, q-face buckets above
    Pairwise,   // every pair of K_q compared directly
    Incidence,  // thresholded sparse product of the incidence matrix
};

inline constexpr std::size_t kIncidenceThreshold = 20'000;

QGraph build_q_graph(const SimplicialComplexView& k, int q, QGraphMethod method = QGraphMethod::Automatic);

/// Blocks of a partition, each ascending, ordered by smallest member.
using Partition = std::vector<std::vector<NodeId>>;

/// Connected components of the q-graph (node ids of the graph).
Partition q_components(const QGraph& g);

/// Same partition of K_q, computed by merging simplices through shared q-faces.
Partition q_components(const SimplicialComplexView& k, int q);

struct StructureVectors {
    // All indexed top dimension first: entry 0 is q = dim(K).
    std::vector<std::size_t> Q;
    std::vector<std::size_t> N;
    std::vector<Fraction> T;
    std::vector<long long> Qhat;
};

StructureVectors structure_vectors(const SimplicialComplexView& k);

class Eccentricity {
public:
    static Eccentricity infinite() { return Eccentricity(); }
    explicit Eccentricity(Fraction value) : value_(value) {}

    bool is_infinite() const noexcept { return !value_.has_value(); }
    Fraction value() const { return value_.value(); }
    std::string to_string() const;

    bool operator==(const Eccentricity&) const = default;

private:
    Eccentricity() = default;
    std::optional<Fraction> value_;
};

/// (dim s - q̌)/(q̌ + 1), q̌ the largest q at which s shares a q-component with a
/// simplex that is not one of its faces. Throws std::invalid_argument if s is
/// not in the complex.
Eccentricity eccentricity(const SimplicialComplexView& k, std::span<const Vertex> s);

using BinaryMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// (row complex, column complex). In the row complex every row is a simplex
/// on the column indices where it has a one; the column complex swaps roles.
std::pair<SimplicialComplexView, SimplicialComplexView> incidence_complexes(const BinaryMatrix& lambda);

/// Lambda * Lambda^T minus the all-ones matrix: dimension of each shared face.
Eigen::MatrixXi shared_face_matrix(const BinaryMatrix& lambda);

/**
 * k-clique communities of the underlying undirected graph of `g`: classes of
 * k-cliques linked by chains of (k-1)-vertex overlaps. Cliques are ascending
 * vertex lists; communities are sorted and ordered by their first clique.
 */
std::vector<std::vector<std::vector<Vertex>>> clique_communities(const Digraph& g, int k);

struct PseudomanifoldCertificate {
    bool is_pm = false;
    bool with_boundary = false;
    std::vector<std::vector<Vertex>> boundary;
    std::vector<std::string> violations;
};

/// Checks K against the pseudomanifold conditions in dimension n. is_pm means
/// no violation with the "at most two" coface rule; with_boundary means some
/// (n-1)-simplex has exactly one coface.
PseudomanifoldCertificate pseudomanifold_check(const SimplicialComplexView& k, int n);

/// Face poset in Hasse form. Element ids run through the complex by
/// dimension then position; `elements[x]` names element x.
struct FacePoset {
    Poset poset;
    std::vector<SimplexId> elements;
};

FacePoset face_poset(const SimplicialComplexView& k);
FacePoset face_poset(const DirectedFlagComplex& k);

}  // namespace dqa
