#pragma once

// Brute-force reference implementations used to cross-check the library.
// Deliberately naive: no indexes, no shared code paths with src/.

#include "dqa/directed.hpp"
#include "dqa/flag_complex.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using dqa::Vertex;
using Tuple = std::vector<Vertex>;

inline bool edge(const dqa::Digraph& g, Vertex a, Vertex b) {
    for (const auto& e : g.edges()) {
        if (e.source == a && e.target == b) {
            return true;
        }
    }
    return false;
}

/// Every ordered tuple of distinct vertices whose pairs i<j are all edges.
inline std::vector<std::vector<Tuple>> flag_tuples(const dqa::Digraph& g) {
    const auto n = static_cast<Vertex>(g.num_vertices());
    std::vector<std::vector<Tuple>> levels;
    Tuple t;
    std::vector<bool> used(n, false);
    auto grow = [&](auto&& self) -> void {
        if (!t.empty()) {
            bool ok = true;
            for (std::size_t a = 0; a < t.size() && ok; ++a) {
                for (std::size_t b = a + 1; b < t.size() && ok; ++b) {
                    ok = edge(g, t[a], t[b]);
                }
            }
            if (!ok) {
                return;
            }
            if (levels.size() < t.size()) {
                levels.resize(t.size());
            }
            levels[t.size() - 1].push_back(t);
        }
        for (Vertex v = 0; v < n; ++v) {
            if (!used[v]) {
                used[v] = true;
                t.push_back(v);
                self(self);
                t.pop_back();
                used[v] = false;
            }
        }
    };
    grow(grow);
    for (auto& l : levels) {
        std::sort(l.begin(), l.end());
    }
    return levels;
}

inline bool subsequence(const Tuple& a, const Tuple& b) {
    std::size_t k = 0;
    for (Vertex v : b) {
        if (k < a.size() && a[k] == v) {
            ++k;
        }
    }
    return k == a.size();
}

inline Tuple drop(const Tuple& s, std::size_t i) {
    Tuple out = s;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(std::min(i, s.size() - 1)));
    return out;
}

/// Nearness straight from the definition: scan every q-simplex of the complex.
inline bool near(const dqa::DirectedFlagComplex& c, const Tuple& a, const Tuple& b, const dqa::ConnectionSpec& s) {
    if (subsequence(a, b)) {
        return true;
    }
    if (a.size() < 2 || b.size() < 2) {
        return false;
    }
    const Tuple fa = drop(a, s.i);
    const Tuple fb = drop(b, s.j);
    for (dqa::SimplexIndex k = 0; k < c.count(s.q); ++k) {
        const auto alpha = c.simplex(s.q, k);
        const Tuple al(alpha.begin(), alpha.end());
        if (subsequence(al, fa) && subsequence(al, fb)) {
            return true;
        }
    }
    return false;
}

/// All edges of the connectivity digraph as pairs of tuples.
inline std::set<std::pair<Tuple, Tuple>> connectivity_edges(const dqa::DirectedFlagComplex& c,
                                                             const dqa::ConnectionSpec& s) {
    std::vector<Tuple> nodes;
    for (int d = s.q; d <= c.dim(); ++d) {
        for (dqa::SimplexIndex k = 0; k < c.count(d); ++k) {
            const auto t = c.simplex(d, k);
            nodes.emplace_back(t.begin(), t.end());
        }
    }
    std::set<std::pair<Tuple, Tuple>> out;
    for (const auto& a : nodes) {
        for (const auto& b : nodes) {
            if (a != b && near(c, a, b, s)) {
                out.emplace(a, b);
            }
        }
    }
    return out;
}

/// Maximum node count over all directed paths, and the smallest such path.
inline std::vector<dqa::NodeId> longest_path(const dqa::CsrGraph& dag) {
    std::vector<dqa::NodeId> best;
    std::vector<dqa::NodeId> cur;
    auto walk = [&](auto&& self) -> void {
        if (cur.size() > best.size() || (cur.size() == best.size() && cur < best)) {
            best = cur;
        }
        for (auto s : dag.successors(cur.back())) {
            cur.push_back(s);
            self(self);
            cur.pop_back();
        }
    };
    for (dqa::NodeId v = 0; v < dag.size(); ++v) {
        cur.assign(1, v);
        walk(walk);
    }
    return best;
}

/// Erdos-Renyi style digraph without loops.
inline dqa::Digraph random_digraph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<dqa::Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (a != b && coin(rng)) {
                edges.push_back({a, b});
            }
        }
    }
    return dqa::Digraph(n, edges);
}

/// Digraph number `code` on n vertices: bit k decides the k-th ordered pair.
inline dqa::Digraph digraph_from_code(std::size_t n, unsigned long code) {
    std::vector<dqa::Edge> edges;
    unsigned bit = 0;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
            if (a != b) {
                if (code >> bit & 1UL) {
                    edges.push_back({a, b});
                }
                ++bit;
            }
        }
    }
    return dqa::Digraph(n, edges);
}

}  // namespace oracle
