#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "contractix/graph.hpp"
#include "oracles.hpp"

using namespace contractix;

TEST_SUITE_BEGIN("graph");

TEST_CASE("neighborhood basics") {
    Graph k3 = Graph::complete(3);
    CHECK(k3.neighborhood(0) == VertexSet(0b110));

    Graph k1(1);
    CHECK(k1.neighborhood(0).empty());

    Graph p3 = Graph::path(3);
    CHECK(p3.neighborhood(1) == VertexSet(0b101));

    CHECK_THROWS_AS((void)p3.neighborhood(3), std::out_of_range);
    CHECK_THROWS_AS((void)p3.neighborhood(-1), std::out_of_range);
}

TEST_CASE("common neighborhood") {
    Graph c4 = Graph::cycle(4);
    CHECK(c4.common_neighborhood(0, 2) == VertexSet(0b1010));

    Graph k4 = Graph::complete(4);
    CHECK(k4.common_neighborhood(0, 1) == VertexSet(0b1100));
    CHECK(k4.common_neighborhood(2, 3) == VertexSet(0b0011));

    Graph p3 = Graph::path(3);
    CHECK(p3.common_neighborhood(0, 2) == VertexSet(0b010));

    CHECK_THROWS_AS((void)p3.common_neighborhood(1, 1), std::invalid_argument);
}

TEST_CASE("common neighborhood is symmetric and ignores adjacency") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracles::random_graph(rng, 8, 0.5);
        for (int v = 0; v < 8; ++v)
            for (int u = 0; u < v; ++u) {
                CHECK(g.common_neighborhood(u, v) == g.common_neighborhood(v, u));
                CHECK(!g.common_neighborhood(u, v).contains(u));
                CHECK(!g.common_neighborhood(u, v).contains(v));
            }
    }
}

TEST_CASE("no vertex neighbors itself") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracles::random_graph(rng, 10, 0.5);
        for (int v = 0; v < 10; ++v) CHECK(!g.neighborhood(v).contains(v));
    }
}

TEST_CASE("induced subgraph") {
    Graph k4 = Graph::complete(4);
    CHECK(k4.induced(VertexSet(0b0111)) == Graph::complete(3));

    Graph c5 = Graph::cycle(5);
    Graph two = c5.induced(VertexSet(0b00101));
    CHECK(two.order() == 2);
    CHECK(two.size() == 0);

    CHECK(c5.induced(c5.vertices()) == c5);
    CHECK_THROWS_AS((void)c5.induced(VertexSet{}), std::invalid_argument);
    CHECK_THROWS_AS((void)c5.induced(VertexSet(0b100000)), std::out_of_range);
}

TEST_CASE("induced relabels ascending") {
    // path 0-1-2-3; keep {1,3}: no edge; keep {1,2}: edge 0-1 of the new graph
    Graph p4 = Graph::path(4);
    Graph a = p4.induced(VertexSet(0b1010));
    CHECK(a.size() == 0);
    Graph b = p4.induced(VertexSet(0b0110));
    CHECK(b.adjacent(0, 1));
}

TEST_CASE("connectivity") {
    CHECK(Graph(1).connected());
    CHECK(!Graph(2).connected());
    CHECK(Graph::cycle(6).connected());
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(!two_triangles.connected());
}

TEST_CASE("cone apex") {
    CHECK(Graph::complete(5).cone_apex() == 0);
    CHECK(!Graph::cycle(4).cone_apex().has_value());
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(star.cone_apex() == 0);
    CHECK(Graph(1).cone_apex() == 0);
}

TEST_CASE("vertex and edge editing") {
    Graph p3 = Graph::path(3);
    Graph k3 = p3.with_edge(0, 2);
    CHECK(k3 == Graph::complete(3));
    CHECK(k3.without_edge(0, 2) == p3);

    Graph with_new = p3.with_vertex(VertexSet(0b101));
    CHECK(with_new.order() == 4);
    CHECK(with_new.adjacent(3, 0));
    CHECK(with_new.adjacent(3, 2));
    CHECK(!with_new.adjacent(3, 1));

    // deleting vertex 1 of path 0-1-2-3 leaves {0, 2, 3} relabeled 0, 1, 2
    Graph p4 = Graph::path(4);
    Graph cut = p4.without_vertex(1);
    CHECK(cut.order() == 3);
    CHECK(!cut.adjacent(0, 1));
    CHECK(cut.adjacent(1, 2));

    CHECK_THROWS_AS((void)Graph(1).without_vertex(0), std::invalid_argument);
}

TEST_CASE("permuted relabels edges") {
    Graph p3 = Graph::path(3);
    std::vector<int> rot{1, 2, 0};
    Graph q = p3.permuted(rot);
    CHECK(q.adjacent(1, 2));
    CHECK(q.adjacent(2, 0));
    CHECK(!q.adjacent(0, 1));

    std::vector<int> bad{0, 0, 2};
    CHECK_THROWS_AS((void)p3.permuted(bad), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
    std::string text =
        "# heart-ish comment\n"
        "n 4\n"
        "\n"
        "1 2\n"
        "2 3   # trailing comment\n"
        "3 4\n"
        "4 1\n";
    Graph g = parse_edge_list(text);
    CHECK(g == Graph::cycle(4));

    // round trip through the formatter
    CHECK(parse_edge_list(format_edge_list(g)) == g);
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_edge_list(std::string("")), doctest::Contains("missing"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list(std::string("m 4\n1 2\n")), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list(std::string("n 4\n0 2\n")), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list(std::string("n 4\n1 5\n")), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list(std::string("n 4\n2 2\n")), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list(std::string("n 4\n1 2 3\n")), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list(std::string("n 0\n")), std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list(std::string("n 65\n")), std::runtime_error);
}

TEST_CASE("order bounds") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_NOTHROW(Graph(64));
}

TEST_SUITE_END();
