#include "dqa/error.hpp"
#include "dqa/flag_complex.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace dqa;

namespace {

std::vector<std::vector<Vertex>> level(const DirectedFlagComplex& c, int d) {
    std::vector<std::vector<Vertex>> out;
    for (SimplexIndex i = 0; i < c.count(d); ++i) {
        const auto s = c.simplex(d, i);
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

}  // namespace

TEST_CASE("simplex counts of the small examples") {
    CHECK(simplex_counts(build_complex(fixture::cycle3())) == std::vector<std::size_t>{3, 3});
    CHECK(simplex_counts(build_complex(Digraph(1, {}))) == std::vector<std::size_t>{1});
    CHECK(simplex_counts(build_complex(Digraph())) == std::vector<std::size_t>{0});

    const auto t = build_complex(Digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(level(t, 2) == std::vector<std::vector<Vertex>>{{0, 1, 2}});

    const auto s = build_complex(fixture::sphere0123());
    CHECK(simplex_counts(s) == std::vector<std::size_t>{4, 6, 4});
    CHECK(level(s, 2) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 2, 1}, {1, 2, 3}, {2, 1, 3}});
}

TEST_CASE("ordered simplex basics") {
    CHECK_THROWS_AS(OrderedSimplex(std::vector<Vertex>{}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedSimplex({1, 2, 1}), std::invalid_argument);
    CHECK(OrderedSimplex({3, 1}).dim() == 1);
    CHECK(OrderedSimplex({0, 1, 2}).to_string() == "(0,1,2)");
}

TEST_CASE("face maps") {
    CHECK(face({0, 1, 2}, 1) == OrderedSimplex{0, 2});
    CHECK(face({0, 1}, 0) == OrderedSimplex{1});
    CHECK(face(face({0, 1, 2, 3}, 3), 1) == face(face({0, 1, 2, 3}, 1), 2));
    CHECK_THROWS_AS(face({0, 1}, 2), std::out_of_range);
    CHECK_THROWS_AS(face({4}, 0), std::out_of_range);
}

TEST_CASE("modified face maps") {
    CHECK(face_hat({0, 1, 2}, 1) == OrderedSimplex{0, 2});
    CHECK(face_hat({0, 1, 2}, 5) == OrderedSimplex{0, 1});
    CHECK_FALSE(face_hat({7}, 0).has_value());
    for (std::size_t i = 0; i < 6; ++i) {
        const OrderedSimplex s{4, 2, 9, 1};
        CHECK(*face_hat(s, i) == face(s, std::min<std::size_t>(i, 3)));
    }
}

TEST_CASE("ordered faces") {
    CHECK(is_face({0, 2}, {0, 1, 2}));
    CHECK_FALSE(is_face({2, 0}, {0, 1, 2}));
    CHECK(is_face({0, 1}, {0, 1}));
    CHECK_FALSE(is_face({0, 1, 2}, {0, 1}));
}

TEST_CASE("flag property and closure against the all-tuples filter") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const auto g = oracle::random_digraph(rng, n, trial % 3 == 0 ? 0.7 : 0.4);
        const auto c = build_complex(g);
        const auto expected = oracle::flag_tuples(g);
        REQUIRE(static_cast<std::size_t>(c.dim() + 1) == expected.size());
        for (int d = 0; d <= c.dim(); ++d) {
            CHECK(level(c, d) == expected[static_cast<std::size_t>(d)]);
        }
        for (int d = 1; d <= c.dim(); ++d) {
            for (SimplexIndex k = 0; k < c.count(d); ++k) {
                const auto s = c.simplex_at({d, k});
                for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
                    CHECK(c.contains(face(s, i).vertices()));
                    for (std::size_t j = i + 1; j <= static_cast<std::size_t>(d) && d >= 2; ++j) {
                        CHECK(face(face(s, j), i) == face(face(s, i), j - 1));
                    }
                }
            }
        }
    }
}

TEST_CASE("max_dim caps the enumeration") {
    BuildOptions o;
    o.max_dim = 1;
    CHECK(simplex_counts(build_complex(fixture::complete_ascending(5), o)) == std::vector<std::size_t>{5, 10});
}

TEST_CASE("enumeration is independent of the worker count") {
    std::mt19937 rng(17);
    const auto g = oracle::random_digraph(rng, 120, 0.12);
    BuildOptions one;
    BuildOptions many;
    many.workers = 4;
    CHECK(build_complex(g, one) == build_complex(g, many));
}

TEST_CASE("guard aborts with partial counts") {
    BuildOptions o;
    o.simplex_ceiling = 20;
    try {
        build_complex(fixture::complete_ascending(7), o);
        FAIL("expected a guard abort");
    } catch (const GuardExceeded& e) {
        CHECK_FALSE(e.partial_counts().empty());
    }
}

TEST_CASE("cofaces") {
    const auto c = build_complex(fixture::sphere0123());
    const auto e01 = *c.find(std::vector<Vertex>{0, 1});
    const auto cof = c.cofaces(1, e01);
    REQUIRE(cof.size() == 2);
    CHECK(c.simplex_at({2, cof[0]}) == OrderedSimplex{0, 1, 2});
    CHECK(c.simplex_at({2, cof[1]}) == OrderedSimplex{0, 2, 1});
}

TEST_CASE("text export round trip") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = build_complex(oracle::random_digraph(rng, 7, 0.5));
        std::stringstream io;
        write_complex(io, c);
        const auto back = read_complex(io);
        CHECK(back.store() == c.store());
    }
    std::istringstream bad("dim 0\n0\nx 1\n");
    CHECK_THROWS_AS(read_complex(bad), ParseError);
}

TEST_CASE("from_simplices closes under ordered faces") {
    const auto c = DirectedFlagComplex::from_simplices({OrderedSimplex{2, 0, 1}});
    CHECK(simplex_counts(c) == std::vector<std::size_t>{3, 3, 1});
    CHECK(c.contains(std::vector<Vertex>{2, 1}));
    CHECK_FALSE(c.contains(std::vector<Vertex>{1, 2}));
}
