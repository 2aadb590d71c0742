#pragma once

#include "dqa/digraph.hpp"
#include "dqa/simplex_store.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dqa {

/// Ordered tuple of distinct vertices (v0,...,vn); dimension n = size-1 >= 0.
class OrderedSimplex {
public:
    /// Throws std::invalid_argument if `vertices` is empty or has repeats.
    explicit OrderedSimplex(std::vector<Vertex> vertices);
    OrderedSimplex(std::initializer_list<Vertex> vertices) : OrderedSimplex(std::vector<Vertex>(vertices)) {}
    explicit OrderedSimplex(std::span<const Vertex> vertices)
        : OrderedSimplex(std::vector<Vertex>(vertices.begin(), vertices.end())) {}

    int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    /// "(0,1,2)"
    std::string to_string() const;

    auto operator<=>(const OrderedSimplex&) const = default;

private:
    std::vector<Vertex> vertices_;
};

/// "(0,1,2)" for any vertex tuple.
std::string tuple_string(std::span<const Vertex> vertices);

/// Face map d_i: drops the vertex at position i. Requires dim >= 1 and
/// i <= dim; throws std::out_of_range otherwise.
OrderedSimplex face(const OrderedSimplex& s, std::size_t i);

/// Modified face map: drops the vertex at position min(i, dim). A 0-simplex
/// has only the empty face, returned as std::nullopt.
std::optional<OrderedSimplex> face_hat(const OrderedSimplex& s, std::size_t i);

/// Position removed by the modified face map.
inline std::size_t face_hat_position(int dim, std::size_t i) {
    return std::min(i, static_cast<std::size_t>(dim));
}

/// True iff `a` is an order-preserving subsequence of `b` (a simplex is a face of itself).
bool is_face(std::span<const Vertex> a, std::span<const Vertex> b);
inline bool is_face(const OrderedSimplex& a, const OrderedSimplex& b) { return is_face(a.vertices(), b.vertices()); }

/**
 * Ordered simplicial complex: per-dimension lexicographically sorted ordered
 * simplices, closed under taking ordered faces, plus a codimension-one
 * coface index. Produced by build_complex for directed flag complexes or by
 * from_simplices for arbitrary ordered complexes. Immutable.
 */
class DirectedFlagComplex {
public:
    DirectedFlagComplex() = default;

    /// Closure of the given ordered simplices under all ordered faces.
    static DirectedFlagComplex from_simplices(const std::vector<OrderedSimplex>& simplices,
                                              std::size_t num_vertices = 0);
    /// Takes ownership of already face-closed levels (sorted here).
    static DirectedFlagComplex from_store(SimplexStore store, std::size_t num_vertices);

    int dim() const noexcept { return store_.dim(); }
    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t count(int d) const noexcept { return store_.count(d); }
    std::size_t total() const { return store_.total(); }

    std::span<const Vertex> simplex(int d, SimplexIndex i) const { return store_.at(d, i); }
    std::span<const Vertex> simplex(SimplexId id) const { return store_.at(id); }
    OrderedSimplex simplex_at(SimplexId id) const { return OrderedSimplex(store_.at(id)); }

    std::optional<SimplexIndex> find(std::span<const Vertex> tuple) const { return store_.find(tuple); }
    bool contains(std::span<const Vertex> tuple) const { return find(tuple).has_value(); }

    /// (d+1)-simplices having simplex (d, i) as a codimension-one face, ascending.
    std::span<const SimplexIndex> cofaces(int d, SimplexIndex i) const;

    const SimplexStore& store() const noexcept { return store_; }

    bool operator==(const DirectedFlagComplex& other) const {
        return num_vertices_ == other.num_vertices_ && store_ == other.store_;
    }

private:
    void index_cofaces();

    std::size_t num_vertices_ = 0;
    SimplexStore store_;
    std::vector<std::vector<std::size_t>> coface_offsets_;
    std::vector<std::vector<SimplexIndex>> coface_targets_;
};

struct BuildOptions {
    /// Highest dimension enumerated; unlimited when empty.
    std::optional<int> max_dim;
    /// Per-dimension simplex ceiling; exceeding it throws GuardExceeded.
    std::size_t simplex_ceiling = 100'000'000;
    /// Worker threads for enumeration over root vertices (0 = hardware concurrency).
    unsigned workers = 1;
};

/// Enumerates all directed cliques of `g` (the directed flag complex).
DirectedFlagComplex build_complex(const Digraph& g, const BuildOptions& options = {});

/// Simplex count per dimension; a complex with no simplices reports {0}.
std::vector<std::size_t> simplex_counts(const DirectedFlagComplex& c);

/// Text export: "dim k" section headers, then one simplex per line.
void write_complex(std::ostream& out, const DirectedFlagComplex& c);

/// Reads write_complex output, or any list of ordered simplices one per line
/// (section headers optional); the result is closed under faces.
DirectedFlagComplex read_complex(std::istream& in);

}  // namespace dqa
