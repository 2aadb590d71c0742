#include "dqa/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace dqa {

CsrGraph::CsrGraph(std::size_t num_nodes, std::vector<NodeEdge> edges) {
    if (num_nodes > std::numeric_limits<NodeId>::max()) {
        throw std::length_error("too many nodes for 32-bit node ids");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    offsets_.assign(num_nodes + 1, 0);
    targets_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u >= num_nodes || v >= num_nodes) {
            throw std::out_of_range("edge endpoint out of range");
        }
        ++offsets_[u + 1];
        targets_.push_back(v);
    }
    for (std::size_t k = 0; k < num_nodes; ++k) {
        offsets_[k + 1] += offsets_[k];
    }
}

bool CsrGraph::has_edge(NodeId u, NodeId v) const {
    const auto s = successors(u);
    return std::binary_search(s.begin(), s.end(), v);
}

std::vector<NodeEdge> CsrGraph::edges() const {
    std::vector<NodeEdge> out;
    out.reserve(num_edges());
    for (NodeId u = 0; u < size(); ++u) {
        for (NodeId v : successors(u)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

CsrGraph CsrGraph::reversed() const {
    auto e = edges();
    for (auto& [u, v] : e) {
        std::swap(u, v);
    }
    return CsrGraph(size(), std::move(e));
}

SccPartition strongly_connected_components(const CsrGraph& g) {
    const std::size_t n = g.size();
    constexpr NodeId kUnvisited = std::numeric_limits<NodeId>::max();
    std::vector<NodeId> index(n, kUnvisited);
    std::vector<NodeId> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> found;
    NodeId counter = 0;

    struct Frame {
        NodeId node;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& frame = call.back();
            const auto succ = g.successors(frame.node);
            if (frame.next < succ.size()) {
                const NodeId w = succ[frame.next++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[frame.node] = std::min(low[frame.node], index[w]);
                }
                continue;
            }
            const NodeId v = frame.node;
            call.pop_back();
            if (!call.empty()) {
                low[call.back().node] = std::min(low[call.back().node], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<NodeId> members;
                NodeId w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                found.push_back(std::move(members));
            }
        }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SccPartition result;
    result.component_of.assign(n, 0);
    for (NodeId c = 0; c < found.size(); ++c) {
        for (NodeId v : found[c]) {
            result.component_of[v] = c;
        }
    }
    result.components = std::move(found);
    return result;
}

std::optional<std::vector<NodeId>> topological_order(const CsrGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> indegree(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.successors(u)) {
            ++indegree[v];
        }
    }
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            ready.push(v);
        }
    }
    std::vector<NodeId> order;
    order.reserve(n);
    while (!ready.empty()) {
        const NodeId u = ready.top();
        ready.pop();
        order.push_back(u);
        for (NodeId v : g.successors(u)) {
            if (--indegree[v] == 0) {
                ready.push(v);
            }
        }
    }
    if (order.size() != n) {
        return std::nullopt;
    }
    return order;
}

std::vector<std::size_t> bfs_distances(const CsrGraph& g, NodeId source) {
    std::vector<std::size_t> dist(g.size(), std::numeric_limits<std::size_t>::max());
    std::queue<NodeId> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : g.successors(u)) {
            if (dist[v] == std::numeric_limits<std::size_t>::max()) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

}  // namespace dqa
