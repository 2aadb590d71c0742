#include "dqa/classic.hpp"

#include "detail.hpp"
#include "dqa/flag_complex.hpp"

#include <Eigen/SparseCore>

#include <algorithm>
#include <stdexcept>

namespace dqa {

using detail::DisjointSets;
using detail::for_each_subsequence;
using detail::LevelOffsets;

bool q_near(std::span<const Vertex> a, std::span<const Vertex> b, int q) {
    if (q < 0) {
        return false;
    }
    std::vector<Vertex> x(a.begin(), a.end());
    std::vector<Vertex> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::size_t shared = 0;
    for (std::size_t s = 0, t = 0; s < x.size() && t < y.size();) {
        if (x[s] < y[t]) {
            ++s;
        } else if (y[t] < x[s]) {
            ++t;
        } else {
            ++shared;
            ++s;
            ++t;
        }
    }
    return shared >= static_cast<std::size_t>(q) + 1;
}

std::optional<NodeId> QGraph::node_of(SimplexId id) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) {
        return std::nullopt;
    }
    return static_cast<NodeId>(it - nodes.begin());
}

namespace {

void check_q(int q) {
    if (q < 0) {
        throw std::invalid_argument("q must be non-negative");
    }
}

std::vector<NodeEdge> pairwise_edges(const SimplicialComplexView& k, const QGraph& g) {
    std::vector<NodeEdge> edges;
    for (NodeId a = 0; a < g.size(); ++a) {
        for (NodeId b = a + 1; b < g.size(); ++b) {
            if (q_near(k.simplex(g.nodes[a]), k.simplex(g.nodes[b]), g.q)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return edges;
}

std::vector<NodeEdge> incidence_edges(const SimplicialComplexView& k, const QGraph& g) {
    Vertex max_vertex = 0;
    for (Vertex v : k.store().level(0)) {
        max_vertex = std::max(max_vertex, v);
    }
    std::vector<Eigen::Triplet<int>> ones;
    for (NodeId a = 0; a < g.size(); ++a) {
        for (Vertex v : k.simplex(g.nodes[a])) {
            ones.emplace_back(static_cast<int>(a), static_cast<int>(v), 1);
        }
    }
    Eigen::SparseMatrix<int> lambda(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(max_vertex) + 1);
    lambda.setFromTriplets(ones.begin(), ones.end());
    const Eigen::SparseMatrix<int> shared = lambda * Eigen::SparseMatrix<int>(lambda.transpose());
    std::vector<NodeEdge> edges;
    for (Eigen::Index col = 0; col < shared.outerSize(); ++col) {
        for (Eigen::SparseMatrix<int>::InnerIterator it(shared, col); it; ++it) {
            // lambda_ij - 1 is the dimension of the shared face.
            if (it.row() < it.col() && it.value() - 1 >= g.q) {
                edges.emplace_back(static_cast<NodeId>(it.row()), static_cast<NodeId>(it.col()));
            }
        }
    }
    return edges;
}

// Buckets K_q by q-faces; members of one bucket are pairwise q-near.
std::vector<NodeEdge> shared_face_edges(const SimplicialComplexView& k, const QGraph& g) {
    std::vector<std::vector<NodeId>> holders(k.count(g.q));
    for (NodeId a = 0; a < g.size(); ++a) {
        for_each_subsequence(k.simplex(g.nodes[a]), static_cast<std::size_t>(g.q) + 1, [&](auto face) {
            holders[*k.store().find(face)].push_back(a);
        });
    }
    std::vector<NodeEdge> edges;
    for (const auto& h : holders) {
        for (std::size_t s = 0; s < h.size(); ++s) {
            for (std::size_t t = s + 1; t < h.size(); ++t) {
                edges.emplace_back(h[s], h[t]);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

QGraph build_q_graph(const SimplicialComplexView& k, int q, QGraphMethod method) {
    check_q(q);
    QGraph g;
    g.q = q;
    for (int d = q; d <= k.dim(); ++d) {
        for (SimplexIndex i = 0; i < k.count(d); ++i) {
            g.nodes.push_back({d, i});
        }
    }
    switch (method) {
    case QGraphMethod::Pairwise:
        g.edges = pairwise_edges(k, g);
        break;
    case QGraphMethod::Incidence:
        g.edges = incidence_edges(k, g);
        break;
    case QGraphMethod::Automatic:
        g.edges = g.size() < kIncidenceThreshold ? incidence_edges(k, g) : shared_face_edges(k, g);
        break;
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Partition q_components(const QGraph& g) {
    DisjointSets sets(g.size());
    for (const auto& [a, b] : g.edges) {
        sets.unite(a, b);
    }
    return sets.classes();
}

Partition q_components(const SimplicialComplexView& k, int q) {
    check_q(q);
    const LevelOffsets offsets(k.store(), q);
    DisjointSets sets(offsets.size());
    for (int d = q + 1; d <= k.dim(); ++d) {
        for (SimplexIndex i = 0; i < k.count(d); ++i) {
            const NodeId self = offsets.node(d, i);
            for_each_subsequence(k.simplex(d, i), static_cast<std::size_t>(q) + 1, [&](auto face) {
                sets.unite(self, offsets.node(q, *k.store().find(face)));
            });
        }
    }
    return sets.classes();
}

StructureVectors structure_vectors(const SimplicialComplexView& k) {
    StructureVectors v;
    for (int q = k.dim(); q >= 0; --q) {
        const std::size_t classes = q_components(k, q).size();
        std::size_t n = 0;
        for (int d = q; d <= k.dim(); ++d) {
            n += k.count(d);
        }
        v.Q.push_back(classes);
        v.N.push_back(n);
        v.T.push_back(1 - Fraction(static_cast<long long>(classes), static_cast<long long>(n)));
        v.Qhat.push_back(static_cast<long long>(classes) - 1);
    }
    return v;
}

std::string Eccentricity::to_string() const {
    return is_infinite() ? "inf" : dqa::to_string(*value_);
}

Eccentricity eccentricity(const SimplicialComplexView& k, std::span<const Vertex> s) {
    std::vector<Vertex> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    const auto index = k.find(sorted);
    if (!index) {
        throw std::invalid_argument("simplex " + tuple_string(s) + " is not in the complex");
    }
    const int dim = static_cast<int>(sorted.size()) - 1;
    for (int q = dim; q >= 0; --q) {
        const LevelOffsets offsets(k.store(), q);
        const NodeId self = offsets.node(dim, *index);
        for (const auto& block : q_components(k, q)) {
            if (!std::binary_search(block.begin(), block.end(), self)) {
                continue;
            }
            for (NodeId other : block) {
                const auto t = k.simplex(offsets.simplex(other));
                if (!std::includes(sorted.begin(), sorted.end(), t.begin(), t.end())) {
                    return Eccentricity(Fraction(dim - q, q + 1));
                }
            }
            break;
        }
    }
    return Eccentricity::infinite();
}

std::pair<SimplicialComplexView, SimplicialComplexView> incidence_complexes(const BinaryMatrix& lambda) {
    auto supports = [](const BinaryMatrix& m) {
        std::vector<std::vector<Vertex>> simplices;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            std::vector<Vertex> s;
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                if (m(r, c) != 0 && m(r, c) != 1) {
                    throw std::invalid_argument("incidence matrix must be binary");
                }
                if (m(r, c) == 1) {
                    s.push_back(static_cast<Vertex>(c));
                }
            }
            if (!s.empty()) {
                simplices.push_back(std::move(s));
            }
        }
        return SimplicialComplexView::from_simplices(simplices);
    };
    return {supports(lambda), supports(lambda.transpose())};
}

Eigen::MatrixXi shared_face_matrix(const BinaryMatrix& lambda) {
    Eigen::MatrixXi product = lambda * lambda.transpose();
    return product.array() - 1;
}

std::vector<std::vector<std::vector<Vertex>>> clique_communities(const Digraph& g, int k) {
    if (k < 2) {
        throw std::invalid_argument("clique size must be at least 2");
    }
    BuildOptions options;
    options.max_dim = k - 1;
    const auto view = SimplicialComplexView::from_directed(build_complex(orient_ascending(g), options));
    const int top = k - 1;
    const std::size_t n = view.count(top);
    DisjointSets sets(n);
    std::vector<std::optional<SimplexIndex>> first_holder(view.count(top - 1));
    for (SimplexIndex c = 0; c < n; ++c) {
        for_each_subsequence(view.simplex(top, c), static_cast<std::size_t>(top), [&](auto face) {
            auto& holder = first_holder[*view.find(face)];
            if (holder) {
                sets.unite(*holder, c);
            } else {
                holder = c;
            }
        });
    }
    std::vector<std::vector<std::vector<Vertex>>> out;
    for (const auto& block : sets.classes()) {
        std::vector<std::vector<Vertex>> community;
        for (NodeId c : block) {
            const auto s = view.simplex(top, c);
            community.emplace_back(s.begin(), s.end());
        }
        out.push_back(std::move(community));
    }
    return out;
}

PseudomanifoldCertificate pseudomanifold_check(const SimplicialComplexView& k, int n) {
    PseudomanifoldCertificate cert;
    if (n < 1) {
        cert.violations.push_back("dimension must be at least 1");
        return cert;
    }
    if (k.dim() < n) {
        cert.violations.push_back("no " + std::to_string(n) + "-simplices");
        return cert;
    }
    if (k.dim() > n) {
        cert.violations.push_back("complex has simplices of dimension " + std::to_string(k.dim()));
    }

    // (a) every simplex below n lies in a simplex one dimension up
    for (int d = 0; d < n; ++d) {
        std::vector<unsigned> cofaces(k.count(d), 0);
        for (SimplexIndex c = 0; c < k.count(d + 1); ++c) {
            for_each_subsequence(k.simplex(d + 1, c), static_cast<std::size_t>(d) + 1,
                                 [&](auto face) { ++cofaces[*k.find(face)]; });
        }
        for (SimplexIndex f = 0; f < cofaces.size(); ++f) {
            const auto s = k.simplex(d, f);
            if (cofaces[f] == 0) {
                cert.violations.push_back("maximal simplex " + tuple_string(s) + " has dimension " +
                                          std::to_string(d));
            }
            if (d == n - 1 && cofaces[f] > 2) {
                cert.violations.push_back(tuple_string(s) + " is a face of " + std::to_string(cofaces[f]) + " " +
                                          std::to_string(n) + "-simplices");
            }
            if (d == n - 1 && cofaces[f] == 1) {
                cert.boundary.emplace_back(s.begin(), s.end());
            }
        }
    }

    // (c) top simplices chained through shared (n-1)-faces
    const auto top = q_components(k, n - 1);
    const LevelOffsets offsets(k.store(), n - 1);
    std::size_t holding_top = 0;
    for (const auto& block : top) {
        if (std::any_of(block.begin(), block.end(), [&](NodeId x) { return offsets.simplex(x).dim == n; })) {
            ++holding_top;
        }
    }
    if (holding_top > 1) {
        cert.violations.push_back(std::to_string(n) + "-simplices fall into " + std::to_string(holding_top) + " " +
                                  std::to_string(n - 1) + "-components");
    }

    cert.is_pm = cert.violations.empty();
    cert.with_boundary = !cert.boundary.empty();
    return cert;
}

namespace {

FacePoset hasse_of(const SimplexStore& store) {
    const LevelOffsets offsets(store, 0);
    FacePoset fp;
    fp.elements.reserve(offsets.size());
    std::vector<NodeEdge> edges;
    std::vector<Vertex> buffer;
    for (int d = 0; d <= store.dim(); ++d) {
        for (SimplexIndex i = 0; i < store.count(d); ++i) {
            fp.elements.push_back({d, i});
            if (d == 0) {
                continue;
            }
            const auto s = store.at(d, i);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                buffer.assign(s.begin(), s.end());
                buffer.erase(buffer.begin() + static_cast<std::ptrdiff_t>(drop));
                edges.emplace_back(offsets.node(d - 1, *store.find(buffer)), offsets.node(d, i));
            }
        }
    }
    fp.poset = Poset(offsets.size(), std::move(edges));
    return fp;
}

}  // namespace

FacePoset face_poset(const SimplicialComplexView& k) { return hasse_of(k.store()); }

FacePoset face_poset(const DirectedFlagComplex& k) { return hasse_of(k.store()); }

}  // namespace dqa
