#pragma once

#include "dqa/directed.hpp"
#include "dqa/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dqa {

struct SimplicialPath {
    ConnectionSpec spec;
    std::vector<OrderedSimplex> simplices;
    Fraction fraction{1};
    /// Member counts of the condensation nodes the path was built from.
    std::vector<std::size_t> condensation_sizes;

    std::size_t length() const noexcept { return simplices.size(); }
};

/// Maximum node count path in the condensation; ties go to the
/// lexicographically smallest sequence of component ids.
std::vector<NodeId> longest_condensation_path(const Condensation& c);

/// Paths of the condensation in order of decreasing node count, then
/// lexicographically; at most `limit` of them.
std::vector<std::vector<NodeId>> ranked_condensation_paths(const Condensation& c, std::size_t limit);

/**
 * Expands a condensation path into simplices: singleton components are
 * taken as they are, larger ones contribute their longest shortest internal
 * path between the allowed entry and exit members. Returns nullopt when
 * some component has no such path.
 */
std::optional<SimplicialPath> augment_path(const Condensation& c, const ConnectivityDigraph& g,
                                           const std::vector<NodeId>& path);

/// Distinct vertices over the vertex budget of an ideal path glued along
/// q-faces. Throws std::invalid_argument for an empty path.
Fraction path_fraction(const std::vector<OrderedSimplex>& simplices, int q);
inline Fraction path_fraction(const SimplicialPath& p) { return path_fraction(p.simplices, p.spec.q); }

/// True iff every consecutive pair is near under `spec`.
bool verify_path(const std::vector<OrderedSimplex>& simplices, const ConnectionSpec& spec);

struct PathOptions {
    /// Condensation paths tried before giving up.
    std::size_t retries = 32;
    DigraphOptions digraph;
};

/// Digraph, condensation, longest path, augmentation and fraction in one go.
/// Throws EmptyLevel when K_q is empty and InfeasiblePath when no candidate
/// can be augmented.
SimplicialPath longest_simplicial_path(const DirectedFlagComplex& complex, const ConnectionSpec& spec,
                                       const PathOptions& options = {});

}  // namespace dqa
