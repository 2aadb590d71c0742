#include "dqa/classic.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace dqa;

namespace {

using Sets = std::vector<std::vector<Vertex>>;

SimplicialComplexView random_view(std::mt19937& rng, std::size_t n, double p) {
    return SimplicialComplexView::from_directed(build_complex(orient_ascending(oracle::random_digraph(rng, n, p))));
}

std::vector<NodeId> labels(const Partition& p, std::size_t n) {
    std::vector<NodeId> label(n);
    for (NodeId b = 0; b < p.size(); ++b) {
        for (NodeId x : p[b]) {
            label[x] = b;
        }
    }
    return label;
}

}  // namespace

TEST_CASE("q-nearness") {
    CHECK(q_near(std::vector<Vertex>{0, 1, 2}, std::vector<Vertex>{1, 2, 3}, 1));
    CHECK_FALSE(q_near(std::vector<Vertex>{0, 1, 2}, std::vector<Vertex>{2, 3, 4}, 1));
    CHECK(q_near(std::vector<Vertex>{0, 1}, std::vector<Vertex>{0, 1}, 1));
    CHECK(q_near(std::vector<Vertex>{2, 1}, std::vector<Vertex>{1, 2}, 1));
}

TEST_CASE("q-graph examples") {
    const auto t = fixture::tetra_boundary();
    const auto g = build_q_graph(t, 1);
    std::map<NodeId, int> degree;
    for (const auto& [a, b] : g.edges) {
        if (g.nodes[a].dim == 2 && g.nodes[b].dim == 2) {
            ++degree[a];
            ++degree[b];
        }
    }
    REQUIRE(degree.size() == 4);
    for (const auto& [node, d] : degree) {
        CHECK(d == 3);
    }

    const auto c = build_q_graph(fixture::cycle_complex(), 1);
    CHECK(c.size() == 3);
    CHECK(c.edges.empty());

    const auto two = build_q_graph(fixture::two_triangles_edge(), 1);
    int top_edges = 0;
    for (const auto& [a, b] : two.edges) {
        top_edges += two.nodes[a].dim == 2 && two.nodes[b].dim == 2;
    }
    CHECK(top_edges == 1);
}

TEST_CASE("q-components") {
    const auto cyc = fixture::cycle_complex();
    CHECK(q_components(build_q_graph(cyc, 1)).size() == 3);
    CHECK(q_components(build_q_graph(cyc, 0)).size() == 1);
    CHECK(q_components(build_q_graph(fixture::full_triangle(), 0)).size() == 1);
}

TEST_CASE("structure vectors") {
    CHECK(structure_vectors(fixture::full_triangle()).Q == std::vector<std::size_t>{1, 1, 1});
    const auto cyc = structure_vectors(fixture::cycle_complex());
    CHECK(cyc.Q == std::vector<std::size_t>{3, 1});
    CHECK(cyc.N == std::vector<std::size_t>{3, 6});
    CHECK(cyc.Qhat == std::vector<long long>{2, 0});
    CHECK(cyc.T == std::vector<Fraction>{Fraction(0), Fraction(5, 6)});
    CHECK(structure_vectors(fixture::tetra_boundary()).Q == std::vector<std::size_t>{4, 1, 1});
    // the classical view of both small digraphs from the preorder example
    CHECK(structure_vectors(SimplicialComplexView::from_directed(build_complex(fixture::star3()))).Q ==
          std::vector<std::size_t>{3, 1});
}

TEST_CASE("eccentricity") {
    const auto two = fixture::two_triangles_edge();
    CHECK(eccentricity(two, std::vector<Vertex>{0, 1, 2}) == Eccentricity(Fraction(1, 2)));
    CHECK(eccentricity(two, std::vector<Vertex>{3, 2, 1}) == Eccentricity(Fraction(1, 2)));
    CHECK(eccentricity(fixture::two_triangles_vertex(), std::vector<Vertex>{2, 3, 4}) == Eccentricity(Fraction(2)));
    const auto lonely = SimplicialComplexView::from_simplices({{0, 1}, {5}});
    CHECK(eccentricity(lonely, std::vector<Vertex>{5}).is_infinite());
    CHECK(eccentricity(lonely, std::vector<Vertex>{5}).to_string() == "inf");
    CHECK_THROWS_AS(eccentricity(lonely, std::vector<Vertex>{0, 5}), std::invalid_argument);
}

TEST_CASE("incidence complexes and shared faces") {
    BinaryMatrix id = BinaryMatrix::Identity(2, 2);
    auto [rows, cols] = incidence_complexes(id);
    CHECK(rows.counts() == std::vector<std::size_t>{2});
    CHECK(cols.counts() == std::vector<std::size_t>{2});
    CHECK(shared_face_matrix(id) == (Eigen::MatrixXi(2, 2) << 0, -1, -1, 0).finished());

    BinaryMatrix ones = BinaryMatrix::Ones(2, 3);
    CHECK(incidence_complexes(ones).first.counts() == std::vector<std::size_t>{3, 3, 1});

    BinaryMatrix path(2, 3);
    path << 1, 1, 0, 0, 1, 1;
    const auto kx = incidence_complexes(path).first;
    CHECK(kx.counts() == std::vector<std::size_t>{3, 2});
    CHECK(kx.contains(std::vector<Vertex>{0, 1}));
    CHECK(kx.contains(std::vector<Vertex>{1, 2}));
    CHECK(shared_face_matrix(path) == (Eigen::MatrixXi(2, 2) << 1, 0, 0, 1).finished());

    CHECK(shared_face_matrix(BinaryMatrix::Ones(1, 3)) == (Eigen::MatrixXi(1, 1) << 2).finished());

    BinaryMatrix zero_row(2, 2);
    zero_row << 1, 1, 0, 0;
    CHECK(incidence_complexes(zero_row).first.counts() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("clique communities") {
    const Digraph shared_edge(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}});
    const auto a = clique_communities(shared_edge, 3);
    REQUIRE(a.size() == 1);
    CHECK(a[0].size() == 2);

    const Digraph shared_vertex(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(clique_communities(shared_vertex, 3).size() == 2);

    const auto k4 = clique_communities(fixture::complete_ascending(4), 3);
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].size() == 4);

    CHECK_THROWS_AS(clique_communities(shared_edge, 1), std::invalid_argument);
}

TEST_CASE("pseudomanifold certificates") {
    const auto sphere = pseudomanifold_check(fixture::tetra_boundary(), 2);
    CHECK(sphere.is_pm);
    CHECK_FALSE(sphere.with_boundary);

    const auto fan = pseudomanifold_check(fixture::three_triangles_edge(), 2);
    CHECK_FALSE(fan.is_pm);
    REQUIRE(fan.violations.size() == 1);
    CHECK(fan.violations[0] == "(0,1) is a face of 3 2-simplices");

    const auto disc = pseudomanifold_check(fixture::full_triangle(), 2);
    CHECK(disc.is_pm);
    CHECK(disc.with_boundary);
    CHECK(disc.boundary == Sets{{0, 1}, {0, 2}, {1, 2}});

    CHECK_FALSE(pseudomanifold_check(fixture::two_triangles_vertex(), 2).is_pm);
    CHECK_FALSE(pseudomanifold_check(SimplicialComplexView::from_simplices({{0, 1, 2}, {3, 4}}), 2).is_pm);
}

TEST_CASE("face posets") {
    const auto edge = face_poset(SimplicialComplexView::from_simplices({{0, 1}}));
    CHECK(edge.poset.relation().edges() == std::vector<NodeEdge>{{0, 2}, {1, 2}});
    CHECK(face_poset(fixture::full_triangle()).poset.relation().num_edges() == 9);
    CHECK(face_poset(SimplicialComplexView::from_simplices({{4}})).poset.relation().num_edges() == 0);
    CHECK(face_poset(build_complex(fixture::sphere0123())).poset.relation().num_edges() == 12 + 12);
}

TEST_CASE("q-graph construction methods agree with brute force") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const auto k = random_view(rng, 4 + trial % 6, 0.55);
        for (int q = 0; q <= k.dim(); ++q) {
            const auto pair = build_q_graph(k, q, QGraphMethod::Pairwise);
            const auto inc = build_q_graph(k, q, QGraphMethod::Incidence);
            CHECK(pair.edges == inc.edges);
            std::vector<NodeEdge> brute;
            for (NodeId a = 0; a < pair.size(); ++a) {
                for (NodeId b = a + 1; b < pair.size(); ++b) {
                    const auto x = k.simplex(pair.nodes[a]);
                    const auto y = k.simplex(pair.nodes[b]);
                    std::set<Vertex> shared(x.begin(), x.end());
                    int common = 0;
                    for (Vertex v : y) {
                        common += static_cast<int>(shared.count(v));
                    }
                    if (common >= q + 1) {
                        brute.emplace_back(a, b);
                    }
                }
            }
            CHECK(pair.edges == brute);
            // the union-find shortcut gives the same partition
            CHECK(q_components(pair) == q_components(k, q));
        }
    }
}

TEST_CASE("q-connectivity properties on random complexes") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const auto k = random_view(rng, 4 + trial % 7, 0.5);
        for (int q = 1; q <= k.dim(); ++q) {
            // q-connected implies p-connected for p < q
            const auto hi = labels(q_components(k, q), build_q_graph(k, q).size());
            const auto lo_graph = build_q_graph(k, q - 1);
            const auto lo = labels(q_components(lo_graph), lo_graph.size());
            const auto hi_graph = build_q_graph(k, q);
            for (NodeId a = 0; a < hi_graph.size(); ++a) {
                for (NodeId b = 0; b < hi_graph.size(); ++b) {
                    if (hi[a] == hi[b]) {
                        CHECK(lo[*lo_graph.node_of(hi_graph.nodes[a])] == lo[*lo_graph.node_of(hi_graph.nodes[b])]);
                    }
                }
            }
        }
        for (int q = 0; q <= k.dim(); ++q) {
            const auto g = build_q_graph(k, q);
            const auto parts = q_components(g);
            // maximal q-simplices are singleton classes
            for (SimplexIndex i = 0; i < k.count(q); ++i) {
                bool maximal = true;
                for (SimplexIndex c = 0; c < k.count(q + 1) && maximal; ++c) {
                    const auto s = k.simplex(q, i);
                    const auto t = k.simplex(q + 1, c);
                    maximal = !std::includes(t.begin(), t.end(), s.begin(), s.end());
                }
                if (maximal) {
                    const auto node = *g.node_of({q, i});
                    for (const auto& block : parts) {
                        if (std::binary_search(block.begin(), block.end(), node)) {
                            CHECK(block.size() == 1);
                        }
                    }
                }
            }
            // the partition is an equivalence: blocks are disjoint and cover K_q
            std::vector<int> seen(g.size(), 0);
            for (const auto& block : parts) {
                for (NodeId x : block) {
                    ++seen[x];
                }
            }
            CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
            // edges never cross blocks
            const auto label = labels(parts, g.size());
            for (const auto& [a, b] : g.edges) {
                CHECK(label[a] == label[b]);
            }
        }
        // Q_0 counts the components of the 1-skeleton
        {
            std::vector<NodeEdge> skeleton;
            for (SimplexIndex e = 0; e < k.count(1); ++e) {
                const auto s = k.simplex(1, e);
                skeleton.emplace_back(*k.find(s.subspan(0, 1)), *k.find(s.subspan(1, 1)));
            }
            std::vector<NodeEdge> both = skeleton;
            for (auto [a, b] : skeleton) {
                both.emplace_back(b, a);
            }
            const auto comps = strongly_connected_components(CsrGraph(k.count(0), both)).components.size();
            CHECK(structure_vectors(k).Q.back() == comps);
        }
    }
}

TEST_CASE("pseudomanifold q-graph is connected through its closure") {
    const auto t = fixture::tetra_boundary();
    REQUIRE(pseudomanifold_check(t, 2).is_pm);
    const auto g = build_q_graph(t, 1);
    std::vector<NodeId> tops;
    for (NodeId v = 0; v < g.size(); ++v) {
        if (g.nodes[v].dim == 2) {
            tops.push_back(v);
        }
    }
    const auto label = labels(q_components(g), g.size());
    for (NodeId a : tops) {
        for (NodeId b : tops) {
            CHECK(label[a] == label[b]);
        }
    }
}

TEST_CASE("face poset edges are q-near pairs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const auto k = random_view(rng, 4 + trial % 5, 0.5);
        const auto fp = face_poset(k);
        for (const auto& [a, b] : fp.poset.relation().edges()) {
            const auto sa = fp.elements[a];
            CHECK(q_near(k.simplex(sa), k.simplex(fp.elements[b]), sa.dim));
        }
    }
}
