#pragma once

// Small digraphs and complexes shared by the test suites.

#include "dqa/flag_complex.hpp"
#include "dqa/simplicial_complex.hpp"

#include <vector>

namespace fixture {

using dqa::Digraph;

inline Digraph cycle3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// b->a, c->a, d->a with a=0, b=1, c=2, d=3
inline Digraph star3() { return Digraph(4, {{1, 0}, {2, 0}, {3, 0}}); }

inline Digraph sphere0123() { return Digraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 1}, {1, 3}, {2, 3}}); }

// N=0, W=1, E=2, S=3
inline Digraph sphere_nwes() { return Digraph(4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}, {1, 2}, {2, 1}}); }

// Rim a->b->c->d->e->a (0..4), every rim vertex -> f (5).
inline Digraph pentagon_sink() {
    std::vector<dqa::Edge> e;
    for (dqa::Vertex v = 0; v < 5; ++v) {
        e.push_back({v, (v + 1) % 5});
        e.push_back({v, 5});
    }
    return Digraph(6, e);
}

inline Digraph complete_ascending(std::size_t n) {
    std::vector<dqa::Edge> e;
    for (dqa::Vertex a = 0; a < n; ++a) {
        for (dqa::Vertex b = a + 1; b < n; ++b) {
            e.push_back({a, b});
        }
    }
    return Digraph(n, e);
}

inline dqa::SimplicialComplexView tetra_boundary() {
    return dqa::SimplicialComplexView::from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline dqa::SimplicialComplexView full_triangle() { return dqa::SimplicialComplexView::from_simplices({{0, 1, 2}}); }

inline dqa::SimplicialComplexView cycle_complex() {
    return dqa::SimplicialComplexView::from_simplices({{0, 1}, {1, 2}, {0, 2}});
}

inline dqa::SimplicialComplexView two_triangles_edge() {
    return dqa::SimplicialComplexView::from_simplices({{0, 1, 2}, {1, 2, 3}});
}

inline dqa::SimplicialComplexView two_triangles_vertex() {
    return dqa::SimplicialComplexView::from_simplices({{0, 1, 2}, {2, 3, 4}});
}

inline dqa::SimplicialComplexView three_triangles_edge() {
    return dqa::SimplicialComplexView::from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
}

}  // namespace fixture
