#include "dqa/directed.hpp"

#include "detail.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace dqa {

using detail::for_each_subsequence;
using detail::LevelOffsets;

std::string to_string(const ConnectionSpec& spec) {
    return "(" + std::to_string(spec.q) + "," + std::to_string(spec.i) + "," + std::to_string(spec.j) + ")";
}

namespace {

// Length of the longest common subsequence.
std::size_t common_subsequence(std::span<const Vertex> x, std::span<const Vertex> y) {
    std::vector<std::size_t> row(y.size() + 1, 0);
    for (Vertex vx : x) {
        std::size_t diag = 0;
        for (std::size_t t = 0; t < y.size(); ++t) {
            const std::size_t up = row[t + 1];
            row[t + 1] = vx == y[t] ? diag + 1 : std::max(row[t + 1], row[t]);
            diag = up;
        }
    }
    return row.back();
}

std::vector<Vertex> drop_position(std::span<const Vertex> s, std::size_t i) {
    std::vector<Vertex> out(s.begin(), s.end());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(face_hat_position(static_cast<int>(s.size()) - 1, i)));
    return out;
}

unsigned resolve_workers(unsigned workers) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    return workers;
}

}  // namespace

bool directed_q_near(std::span<const Vertex> a, std::span<const Vertex> b, const ConnectionSpec& spec) {
    if (spec.q < 0) {
        return false;
    }
    const auto need = static_cast<std::size_t>(spec.q) + 1;
    if (a.size() < need || b.size() < need) {
        return false;
    }
    if (is_face(a, b)) {
        return true;
    }
    // A 0-simplex only has the empty face.
    if (a.size() == 1 || b.size() == 1) {
        return false;
    }
    return common_subsequence(drop_position(a, spec.i), drop_position(b, spec.j)) >= need;
}

ConnectivityDigraph::ConnectivityDigraph(const DirectedFlagComplex& complex, ConnectionSpec spec, CsrGraph graph)
    : complex_(&complex), spec_(spec), graph_(std::move(graph)) {
    for (int d = spec.q; d <= complex.dim(); ++d) {
        offsets_.push_back(offsets_.back() + complex.count(d));
    }
    if (offsets_.back() != graph_.size()) {
        throw std::invalid_argument("graph size does not match K_q");
    }
}

SimplexId ConnectivityDigraph::simplex_id(NodeId node) const {
    const auto level = static_cast<std::size_t>(std::upper_bound(offsets_.begin(), offsets_.end(), node) -
                                                offsets_.begin()) - 1;
    return {spec_.q + static_cast<int>(level), static_cast<SimplexIndex>(node - offsets_[level])};
}

std::optional<NodeId> ConnectivityDigraph::node_of(SimplexId id) const {
    if (id.dim < spec_.q || id.dim > complex_->dim() || id.index >= complex_->count(id.dim)) {
        return std::nullopt;
    }
    return static_cast<NodeId>(offsets_[static_cast<std::size_t>(id.dim - spec_.q)] + id.index);
}

std::optional<NodeId> ConnectivityDigraph::node_of(std::span<const Vertex> tuple) const {
    if (tuple.empty()) {
        return std::nullopt;
    }
    const int d = static_cast<int>(tuple.size()) - 1;
    if (d < spec_.q || d > complex_->dim()) {
        return std::nullopt;
    }
    const auto found = complex_->store().find(tuple);
    if (!found) {
        return std::nullopt;
    }
    return node_of(SimplexId{d, *found});
}

namespace {

std::vector<NodeEdge> inclusion_edges(const SimplexStore& store, const LevelOffsets& offsets) {
    std::vector<NodeEdge> edges;
    const int q = offsets.q();
    for (int d = q + 1; d <= store.dim(); ++d) {
        for (SimplexIndex t = 0; t < store.count(d); ++t) {
            const NodeId target = offsets.node(d, t);
            for (int sub = q; sub < d; ++sub) {
                for_each_subsequence(store.at(d, t), static_cast<std::size_t>(sub) + 1, [&](auto face) {
                    edges.emplace_back(offsets.node(sub, *store.find(face)), target);
                });
            }
        }
    }
    return edges;
}

std::vector<NodeEdge> flow_edges_indexed(const SimplexStore& store, const LevelOffsets& offsets,
                                         const ConnectionSpec& spec, unsigned workers) {
    const auto width = static_cast<std::size_t>(spec.q) + 1;
    std::vector<std::vector<NodeId>> sources(store.count(spec.q));
    std::vector<std::vector<NodeId>> targets(store.count(spec.q));
    for (NodeId x = 0; x < offsets.size(); ++x) {
        const auto s = store.at(offsets.simplex(x));
        if (s.size() < 2 || s.size() - 1 < width) {
            continue;
        }
        for_each_subsequence(drop_position(s, spec.i), width,
                             [&](auto alpha) { sources[*store.find(alpha)].push_back(x); });
        for_each_subsequence(drop_position(s, spec.j), width,
                             [&](auto alpha) { targets[*store.find(alpha)].push_back(x); });
    }

    const std::size_t buckets = sources.size();
    workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(buckets, 1)));
    std::vector<std::vector<NodeEdge>> parts(workers);
    auto join = [&](unsigned w) {
        auto& out = parts[w];
        std::size_t compact_at = std::size_t{1} << 22;
        for (std::size_t a = w; a < buckets; a += workers) {
            for (NodeId s : sources[a]) {
                for (NodeId t : targets[a]) {
                    if (s != t) {
                        out.emplace_back(s, t);
                    }
                }
            }
            // Keep per-worker memory in check on heavy buckets.
            if (out.size() > compact_at) {
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
                compact_at = std::max(compact_at, 2 * out.size());
            }
        }
    };
    if (workers == 1) {
        join(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(join, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    std::vector<NodeEdge> edges;
    for (auto& p : parts) {
        edges.insert(edges.end(), p.begin(), p.end());
    }
    return edges;
}

std::vector<NodeEdge> all_pairs_edges(const SimplexStore& store, const LevelOffsets& offsets,
                                      const ConnectionSpec& spec) {
    std::vector<NodeEdge> edges;
    for (NodeId x = 0; x < offsets.size(); ++x) {
        for (NodeId y = 0; y < offsets.size(); ++y) {
            if (x != y && directed_q_near(store.at(offsets.simplex(x)), store.at(offsets.simplex(y)), spec)) {
                edges.emplace_back(x, y);
            }
        }
    }
    return edges;
}

}  // namespace

ConnectivityDigraph build_connectivity_digraph(const DirectedFlagComplex& complex, const ConnectionSpec& spec,
                                               const DigraphOptions& options) {
    if (spec.q < 0) {
        throw std::invalid_argument("q must be non-negative");
    }
    const auto& store = complex.store();
    const LevelOffsets offsets(store, spec.q);
    std::vector<NodeEdge> edges;
    if (options.strategy == EdgeStrategy::AllPairs && offsets.size() < kAllPairsLimit) {
        edges = all_pairs_edges(store, offsets, spec);
    } else {
        edges = inclusion_edges(store, offsets);
        auto flows = flow_edges_indexed(store, offsets, spec, options.workers);
        edges.insert(edges.end(), flows.begin(), flows.end());
    }
    return ConnectivityDigraph(complex, spec, CsrGraph(offsets.size(), std::move(edges)));
}

Condensation condense(const CsrGraph& g) {
    Condensation c;
    c.scc = strongly_connected_components(g);
    std::vector<NodeEdge> quotient;
    for (NodeId u = 0; u < g.size(); ++u) {
        for (NodeId v : g.successors(u)) {
            const NodeId cu = c.scc.component_of[u];
            const NodeId cv = c.scc.component_of[v];
            if (cu != cv) {
                quotient.emplace_back(cu, cv);
            }
        }
    }
    c.dag = CsrGraph(c.scc.components.size(), std::move(quotient));
    if (!topological_order(c.dag)) {
        throw std::logic_error("condensation has a directed cycle");
    }
    return c;
}

PseudomanifoldCertificate directed_pseudomanifold_check(const DirectedFlagComplex& complex, int n, std::size_t i,
                                                        std::size_t j) {
    PseudomanifoldCertificate cert;
    if (n < 1) {
        cert.violations.push_back("dimension must be at least 1");
        return cert;
    }
    if (complex.dim() < n) {
        cert.violations.push_back("no " + std::to_string(n) + "-simplices");
        return cert;
    }
    if (complex.dim() > n) {
        cert.violations.push_back("complex has simplices of dimension " + std::to_string(complex.dim()));
    }
    for (int d = 0; d < n; ++d) {
        for (SimplexIndex f = 0; f < complex.count(d); ++f) {
            const auto cofaces = complex.cofaces(d, f).size();
            const auto s = complex.simplex(d, f);
            if (cofaces == 0) {
                cert.violations.push_back("maximal simplex " + tuple_string(s) + " has dimension " +
                                          std::to_string(d));
            }
            if (d == n - 1 && cofaces > 2) {
                cert.violations.push_back(tuple_string(s) + " is a face of " + std::to_string(cofaces) + " " +
                                          std::to_string(n) + "-simplices");
            }
            if (d == n - 1 && cofaces == 1) {
                cert.boundary.emplace_back(s.begin(), s.end());
            }
        }
    }

    const ConnectionSpec spec{n - 1, i, j};
    const auto g = build_connectivity_digraph(complex, spec);
    const auto c = condense(g);
    std::set<NodeId> holding;
    for (SimplexIndex t = 0; t < complex.count(n); ++t) {
        holding.insert(c.scc.component_of[*g.node_of(SimplexId{n, t})]);
    }
    if (holding.size() > 1) {
        cert.violations.push_back(std::to_string(n) + "-simplices are not mutually " + to_string(spec) +
                                  "-connected");
    }
    cert.is_pm = cert.violations.empty();
    cert.with_boundary = !cert.boundary.empty();
    return cert;
}

StructureMap::StructureMap(const DirectedFlagComplex& complex) : complex_(&complex) {
    const int top = complex.dim();
    if (top < 0) {
        return;
    }
    const auto D = static_cast<std::size_t>(top);
    for (int q = 0; q < top; ++q) {
        for (std::size_t i = 0; i <= D; ++i) {
            for (std::size_t j = 0; j <= D; ++j) {
                specs_.push_back({q, i, j});
            }
        }
    }
    specs_.push_back({top, 0, 0});
}

}  // namespace dqa
