#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "brute_force.hpp"
#include "tdc/dimacs.hpp"
#include "tdc/families.hpp"
#include "tdc/graph.hpp"

using namespace tdc;

TEST_CASE("from_edges builds simple graphs") {
    auto k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 1}});
    CHECK(p3.edge_count() == 2);
    CHECK(p3 == path_graph(3));

    auto reversed = Graph::from_edges(3, {{1, 0}, {2, 1}});
    CHECK(reversed == p3);
}

TEST_CASE("from_edges rejects loops and out-of-range endpoints") {
    CHECK_THROWS_AS(Graph::from_edges(1, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("neighbors") {
    auto c4 = cycle_graph(4);
    auto n0 = c4.neighbors(0);
    CHECK(std::vector<VertexId>(n0.begin(), n0.end()) == std::vector<VertexId>{1, 3});

    auto k4 = complete_graph(4);
    auto n2 = k4.neighbors(2);
    CHECK(std::vector<VertexId>(n2.begin(), n2.end()) == std::vector<VertexId>{0, 1, 3});

    CHECK(empty_graph(3).neighbors(0).empty());
    CHECK_THROWS_AS(c4.neighbors(4), std::out_of_range);
}

TEST_CASE("connectivity and isolated vertices") {
    CHECK(path_graph(5).is_connected());
    CHECK_FALSE(empty_graph(2).is_connected());
    CHECK(friendship_family(3, 3).is_connected());
    CHECK(empty_graph(0).is_connected());
    CHECK(empty_graph(1).is_connected());

    CHECK(empty_graph(3).has_isolated_vertex());
    CHECK_FALSE(cycle_graph(5).has_isolated_vertex());
    CHECK(Graph::from_edges(3, {{0, 1}}).has_isolated_vertex());
}

TEST_CASE("dimacs writer format") {
    CHECK(to_dimacs(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(to_dimacs(Graph{}) == "p edge 0 0\n");
}

TEST_CASE("dimacs reader") {
    CHECK(from_dimacs(to_dimacs(cycle_graph(6))) == cycle_graph(6));
    CHECK(from_dimacs("c a comment\np edge 3 2\n\ne 1 2\nc mid\ne 3 2\n") == path_graph(3));

    CHECK_THROWS_AS(from_dimacs("p edge 2 1\ne 1 3\n"), DimacsError);
    CHECK_THROWS_AS(from_dimacs("p col 2 1\ne 1 2\n"), DimacsError);
    CHECK_THROWS_AS(from_dimacs("p edge 3 3\ne 1 2\ne 2 3\n"), DimacsError);
    CHECK_THROWS_AS(from_dimacs("e 1 2\n"), DimacsError);
    CHECK_THROWS_AS(from_dimacs("p edge x 1\n"), DimacsError);
    CHECK_THROWS_AS(from_dimacs("p edge 2 1\ne 1 1\n"), DimacsError);
    CHECK_THROWS_AS(from_dimacs(""), DimacsError);

    try {
        from_dimacs("p edge 2 1\ne 1 3\n");
    } catch (const DimacsError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("canonical_key") {
    CHECK(canonical_key(path_graph(3)) == canonical_key(path_graph(3)));
    CHECK(canonical_key(path_graph(3)) != canonical_key(cycle_graph(3)));
    CHECK(canonical_key(Graph{}) == "n0m0-" + canonical_key(Graph{}).substr(5));
    CHECK(canonical_key(Graph{}) == canonical_key(empty_graph(0)));
    CHECK(canonical_key(empty_graph(1)) != canonical_key(empty_graph(2)));
}

TEST_CASE("property: random graphs keep invariants and round-trip through dimacs") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 20);
        std::vector<Edge> edges;
        const unsigned m = static_cast<unsigned>(rng() % (2 * n + 1));
        for (unsigned i = 0; i < m && n > 1; ++i) {
            VertexId u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
            if (u != v) edges.emplace_back(u, v);
        }
        const Graph g = Graph::from_edges(n, edges);
        CHECK_NOTHROW(g.validate());
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId u : g.neighbors(v)) {
                CHECK(u < n);
                CHECK(u != v);
                CHECK(g.has_edge(u, v));
            }
        }
        const std::string text = to_dimacs(g);
        const Graph back = from_dimacs(text);
        CHECK(back == g);
        CHECK(to_dimacs(back) == text);
        CHECK(canonical_key(back) == canonical_key(g));
    }
}

TEST_CASE("neighborhood masks") {
    auto masks = neighborhood_masks(path_graph(3));
    CHECK(masks == std::vector<VertexMask>{0b010, 0b101, 0b010});
    CHECK_NOTHROW(neighborhood_masks(path_graph(64)));
    CHECK_THROWS_AS(neighborhood_masks(path_graph(65)), std::length_error);
}
