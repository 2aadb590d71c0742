#include "dqa/paths.hpp"

#include "dqa/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace dqa {

namespace {

// best[v]: node count of the longest path starting at v.
std::vector<std::size_t> longest_from(const CsrGraph& dag) {
    const auto order = topological_order(dag);
    if (!order) {
        throw std::logic_error("condensation has a directed cycle");
    }
    std::vector<std::size_t> best(dag.size(), 1);
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        for (NodeId s : dag.successors(*it)) {
            best[*it] = std::max(best[*it], best[s] + 1);
        }
    }
    return best;
}

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// A strongly connected component as a small standalone digraph.
struct Block {
    std::vector<NodeId> members;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> in;

    Block(const CsrGraph& g, const Condensation& c, NodeId component) : members(c.members(component)) {
        out.resize(members.size());
        in.resize(members.size());
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (NodeId w : g.successors(members[a])) {
                if (c.scc.component_of[w] == component) {
                    const auto b = local(w);
                    out[a].push_back(b);
                    in[b].push_back(a);
                }
            }
        }
    }

    std::size_t local(NodeId global) const {
        return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), global) - members.begin());
    }

    std::vector<std::size_t> bfs(const std::vector<std::size_t>& starts, bool reverse) const {
        const auto& adj = reverse ? in : out;
        std::vector<std::size_t> dist(members.size(), kUnreached);
        std::queue<std::size_t> frontier;
        for (std::size_t s : starts) {
            dist[s] = 0;
            frontier.push(s);
        }
        while (!frontier.empty()) {
            const auto u = frontier.front();
            frontier.pop();
            for (std::size_t w : adj[u]) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[u] + 1;
                    frontier.push(w);
                }
            }
        }
        return dist;
    }

    // Longest of the shortest source -> target paths; smallest source first,
    // then the lexicographically smallest route.
    std::optional<std::vector<NodeId>> longest_shortest(const std::vector<std::size_t>& sources,
                                                        const std::vector<std::size_t>& targets) const {
        std::vector<std::size_t> reach(members.size(), kUnreached);  // per source: max distance to a target
        if (sources.size() <= targets.size()) {
            for (std::size_t s : sources) {
                const auto d = bfs({s}, false);
                for (std::size_t t : targets) {
                    if (d[t] != kUnreached && (reach[s] == kUnreached || d[t] > reach[s])) {
                        reach[s] = d[t];
                    }
                }
            }
        } else {
            for (std::size_t t : targets) {
                const auto d = bfs({t}, true);
                for (std::size_t s : sources) {
                    if (d[s] != kUnreached && (reach[s] == kUnreached || d[s] > reach[s])) {
                        reach[s] = d[s];
                    }
                }
            }
        }
        std::optional<std::size_t> start;
        for (std::size_t s : sources) {
            if (reach[s] != kUnreached && (!start || reach[s] > reach[*start])) {
                start = s;
            }
        }
        if (!start) {
            return std::nullopt;
        }
        const std::size_t length = reach[*start];
        const auto from_start = bfs({*start}, false);
        std::vector<std::size_t> ends;
        for (std::size_t t : targets) {
            if (from_start[t] == length) {
                ends.push_back(t);
            }
        }
        const auto to_end = bfs(ends, true);
        std::vector<NodeId> route{members[*start]};
        std::size_t cur = *start;
        while (to_end[cur] > 0) {
            for (std::size_t w : out[cur]) {  // ascending
                if (to_end[w] + 1 == to_end[cur]) {
                    cur = w;
                    break;
                }
            }
            route.push_back(members[cur]);
        }
        return route;
    }
};

}  // namespace

std::vector<NodeId> longest_condensation_path(const Condensation& c) {
    if (c.size() == 0) {
        return {};
    }
    const auto best = longest_from(c.dag);
    NodeId cur = static_cast<NodeId>(std::max_element(best.begin(), best.end()) - best.begin());
    std::vector<NodeId> path{cur};
    while (best[cur] > 1) {
        for (NodeId s : c.dag.successors(cur)) {
            if (best[s] + 1 == best[cur]) {
                cur = s;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

std::vector<std::vector<NodeId>> ranked_condensation_paths(const Condensation& c, std::size_t limit) {
    std::vector<std::vector<NodeId>> out;
    if (c.size() == 0 || limit == 0) {
        return out;
    }
    const auto best = longest_from(c.dag);
    const std::size_t top = *std::max_element(best.begin(), best.end());
    std::vector<NodeId> path;
    auto extend = [&](auto&& self, std::size_t length) -> void {
        if (path.size() == length) {
            out.push_back(path);
            return;
        }
        const std::size_t remaining = length - path.size();
        for (NodeId s : c.dag.successors(path.back())) {
            if (best[s] >= remaining) {
                path.push_back(s);
                self(self, length);
                path.pop_back();
                if (out.size() == limit) {
                    return;
                }
            }
        }
    };
    for (std::size_t length = top; length >= 1 && out.size() < limit; --length) {
        for (NodeId v = 0; v < c.size() && out.size() < limit; ++v) {
            if (best[v] >= length) {
                path.assign(1, v);
                extend(extend, length);
            }
        }
    }
    return out;
}

std::optional<SimplicialPath> augment_path(const Condensation& c, const ConnectivityDigraph& g,
                                           const std::vector<NodeId>& path) {
    const auto& graph = g.graph();
    std::vector<NodeId> nodes;
    std::optional<NodeId> current;
    SimplicialPath result;
    result.spec = g.spec();
    for (std::size_t k = 0; k < path.size(); ++k) {
        const auto& members = c.members(path[k]);
        result.condensation_sizes.push_back(members.size());
        if (members.size() == 1) {
            nodes.push_back(members.front());
            current = members.front();
            continue;
        }
        const Block block(graph, c, path[k]);
        std::vector<std::size_t> sources;
        if (k == 0) {
            for (std::size_t a = 0; a < members.size(); ++a) {
                sources.push_back(a);
            }
        } else {
            for (NodeId w : graph.successors(*current)) {
                if (c.scc.component_of[w] == path[k]) {
                    sources.push_back(block.local(w));
                }
            }
        }
        std::vector<std::size_t> targets;
        for (std::size_t a = 0; a < members.size(); ++a) {
            if (k + 1 == path.size()) {
                targets.push_back(a);
                continue;
            }
            const auto succ = graph.successors(members[a]);
            if (std::any_of(succ.begin(), succ.end(),
                            [&](NodeId w) { return c.scc.component_of[w] == path[k + 1]; })) {
                targets.push_back(a);
            }
        }
        const auto route = block.longest_shortest(sources, targets);
        if (!route) {
            return std::nullopt;
        }
        nodes.insert(nodes.end(), route->begin(), route->end());
        current = route->back();
    }
    for (NodeId v : nodes) {
        result.simplices.emplace_back(g.simplex(v));
    }
    if (!result.simplices.empty()) {
        result.fraction = path_fraction(result);
    }
    return result;
}

Fraction path_fraction(const std::vector<OrderedSimplex>& simplices, int q) {
    if (simplices.empty()) {
        throw std::invalid_argument("path fraction of an empty path");
    }
    std::set<Vertex> seen;
    long long budget = simplices.front().dim() + 1;
    for (std::size_t k = 0; k < simplices.size(); ++k) {
        seen.insert(simplices[k].begin(), simplices[k].end());
        if (k == 0) {
            continue;
        }
        const auto& prev = simplices[k - 1];
        const auto& cur = simplices[k];
        budget += is_face(prev, cur) ? cur.dim() - prev.dim() : cur.dim() - q;
    }
    if (budget <= 0) {
        throw std::invalid_argument("path has no positive vertex budget");
    }
    return Fraction(static_cast<long long>(seen.size()), budget);
}

bool verify_path(const std::vector<OrderedSimplex>& simplices, const ConnectionSpec& spec) {
    for (std::size_t k = 1; k < simplices.size(); ++k) {
        if (simplices[k - 1] == simplices[k] || !directed_q_near(simplices[k - 1], simplices[k], spec)) {
            return false;
        }
    }
    return true;
}

SimplicialPath longest_simplicial_path(const DirectedFlagComplex& complex, const ConnectionSpec& spec,
                                       const PathOptions& options) {
    if (spec.q < 0) {
        throw std::invalid_argument("q must be non-negative");
    }
    if (spec.q > complex.dim()) {
        throw EmptyLevel("no simplices of dimension >= " + std::to_string(spec.q));
    }
    const auto g = build_connectivity_digraph(complex, spec, options.digraph);
    const auto c = condense(g);
    for (const auto& candidate : ranked_condensation_paths(c, std::max<std::size_t>(options.retries, 1))) {
        auto path = augment_path(c, g, candidate);
        if (path && verify_path(path->simplices, spec)) {
            return std::move(*path);
        }
    }
    throw InfeasiblePath("no augmentable condensation path among the first " + std::to_string(options.retries) +
                         " candidates for " + to_string(spec));
}

}  // namespace dqa
