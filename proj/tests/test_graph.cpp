#include <sstream>
#include <string>

#include "doctest.h"
#include "support/checks.hpp"
#include "support/enumerate.hpp"
#include "support/random_graphs.hpp"
#include "tdcut/graph.hpp"

using namespace tdcut;
using namespace tdcut_test;

namespace {

std::string parse_failure(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("parses the two-vertex graph") {
    Graph g = parse_graph("p tdp 2 1\n1 2\n");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(g.has_edge(0, 1));
}

TEST_CASE("parses comments, blank lines and CRLF endings") {
    Graph g = parse_graph("c a path on three vertices\r\np tdp 3 2\r\n\r\n1 2\r\n2 3\r\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("rejects malformed inputs with the offending line") {
    CHECK(parse_failure("p tdp 2 1\n1 1\n").find("line 2") != std::string::npos);
    CHECK(parse_failure("p tdp 2 1\n1 1\n").find("self-loop") != std::string::npos);
    CHECK(parse_failure("p tdp 2 2\n1 2\n2 1\n").find("duplicate") != std::string::npos);
    CHECK(parse_failure("p tdp 2 1\n1 3\n").find("out of range") != std::string::npos);
    CHECK(parse_failure("p tdp 2 1\n1 2\n1 2\n").find("line 3") != std::string::npos);
    CHECK(parse_failure("p tdp 2 2\n1 2\n").find("promised") != std::string::npos);
    CHECK(parse_failure("1 2\n").find("header") != std::string::npos);
    CHECK(parse_failure("p tdp 2 1\n1 x\n").find("integers") != std::string::npos);
    CHECK(parse_failure("").find("header") != std::string::npos);
}

TEST_CASE("construction validates endpoints") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidInput);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidInput);
}

TEST_CASE("serialization round-trips") {
    const std::string text = "p tdp 3 2\n1 2\n2 3\n";
    CHECK(serialize_graph(parse_graph(text)) == text);
    SplitMix64 rng(41);
    for (int round = 0; round < 25; ++round) {
        Graph g = random_connected_graph(2 + rng.uniform(30), 0.2, rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    for_all_graphs(4, [](const Graph& g) { CHECK(parse_graph(serialize_graph(g)) == g); });
}

TEST_CASE("connectivity basics") {
    CHECK(is_connected(Graph(0, {})));
    CHECK(is_connected(Graph(1, {})));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK(is_connected(path_graph(3)));
    CHECK(count_components(Graph(2, {})) == 2);
    CHECK(count_components(path_graph(4)) == 1);
}

TEST_CASE("whole-graph bipartiteness") {
    CHECK(is_bipartite(cycle_graph(4)));
    CHECK_FALSE(is_bipartite(complete_graph(3)));
    CHECK(is_bipartite(Graph(0, {})));
}

TEST_CASE("consistent cuts on the path") {
    Graph p3 = path_graph(3);
    CHECK(is_consistent_cut(p3, 0b001, 0b100));
    CHECK_FALSE(is_consistent_cut(p3, 0b001, 0b010));
    CHECK(is_consistent_cut(p3, 0, 0));
    CHECK_THROWS_AS(is_consistent_cut(p3, 0b011, 0b010), ContractViolation);
    CHECK_THROWS_AS(is_consistent_cut(p3, 0b1000, 0), ContractViolation);
}

TEST_CASE("vertex cover on the path") {
    Graph p3 = path_graph(3);
    CHECK(is_vertex_cover(p3, 0b010, p3.full_mask()));
    CHECK_FALSE(is_vertex_cover(p3, 0b001, p3.full_mask()));
    CHECK(is_vertex_cover(p3, 0, 0b001));  // no edge inside the scope
    CHECK_THROWS_AS(is_vertex_cover(p3, 0b100, 0b001), ContractViolation);
}

TEST_CASE("bipartition predicate") {
    Graph p3 = path_graph(3);
    CHECK(is_bipartition(p3, 0b101, 0b010));
    Graph k3 = complete_graph(3);
    CHECK_FALSE(is_bipartition(k3, 0b011, 0b100));
    CHECK(is_bipartition(k3, 0b001, 0b010));
    CHECK_THROWS_AS(is_bipartition(k3, 0b001, 0b001), ContractViolation);
}

TEST_CASE("subset component counts and the empty-set convention") {
    Graph p4 = path_graph(4);
    CHECK(count_components(p4, 0) == 0);
    CHECK(count_components(p4, 0b1001) == 2);
    CHECK(count_components(p4, 0b0011) == 1);
    CHECK(count_components(p4, p4.full_mask()) == 1);
}

TEST_CASE("induced forests and edge counts") {
    Graph c4 = cycle_graph(4);
    CHECK(is_induced_forest(c4, 0b0111));
    CHECK_FALSE(is_induced_forest(c4, c4.full_mask()));
    CHECK(is_induced_forest(c4, 0));
    CHECK(edges_within(complete_graph(3), 0b111) == 3);
    CHECK(edges_within(complete_graph(3), 0b011) == 1);
}

TEST_CASE("closed neighborhoods") {
    Graph star = star_graph(4);
    CHECK(closed_neighborhood(star, 0b0001) == star.full_mask());
    CHECK(closed_neighborhood(star, 0b0010) == 0b0011);
    CHECK(closed_neighborhood(star, 0) == 0);
}

TEST_CASE("consistent cut equals no crossing edge, exhaustively") {
    for (int n = 1; n <= 4; ++n) {
        for_all_graphs(n, [&](const Graph& g) {
            const VertexMask full = g.full_mask();
            for (VertexMask l = 0; l <= full; ++l)
                for (VertexMask r = 0; r <= full; ++r) {
                    if (l & r) continue;
                    bool crossing = false;
                    for (const auto& [u, v] : g.edges())
                        if ((((l >> u) & 1) && ((r >> v) & 1)) ||
                            (((r >> u) & 1) && ((l >> v) & 1)))
                            crossing = true;
                    CHECK(is_consistent_cut(g, l, r) == !crossing);
                }
        });
    }
}

TEST_CASE("forest test agrees with union-find on all subsets, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for_all_graphs(n, [&](const Graph& g) {
            for (VertexMask s = 0; s <= g.full_mask(); ++s)
                CHECK(is_induced_forest(g, s) == acyclic_by_union_find(g, s));
        });
    }
}

TEST_SUITE_END();
