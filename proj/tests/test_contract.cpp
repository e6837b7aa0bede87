#include <doctest.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "contractix/contract.hpp"
#include "contractix/enumerate.hpp"
#include "oracles.hpp"

using namespace contractix;

TEST_SUITE_BEGIN("contract");

namespace {

Policy i1i3;
Policy i1_only{false, 0};

Graph c5_chord() {
    Graph g = Graph::cycle(5);
    return g.with_edge(0, 2);
}

}  // namespace

TEST_CASE("policy tags") {
    CHECK(Policy{}.tag() == "i1i3:g0");
    CHECK(Policy{false, 0}.tag() == "i1:g0");
    CHECK(Policy{true, 2}.tag() == "i1i3:g2");
    CHECK(Policy::from_tag("i1i3:g0") == Policy{});
    CHECK(Policy::from_tag("i1:g3") == Policy{false, 3});
    CHECK(!Policy::from_tag("i2:g0").has_value());
    CHECK(!Policy::from_tag("i1i3:g-1").has_value());
    CHECK(!Policy::from_tag("i1i3:gx").has_value());
}

TEST_CASE("vertex deletion predicate") {
    MemoCache cache;
    for (int n = 2; n <= 6; ++n)
        for (int v = 0; v < n; ++v) CHECK(can_delete_vertex(Graph::complete(n), v, i1i3, cache));

    Graph c5 = Graph::cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(!can_delete_vertex(c5, v, i1i3, cache));
}

TEST_CASE("edge deletion predicate") {
    MemoCache cache;
    Graph k4 = Graph::complete(4);
    CHECK(can_delete_edge(k4, 0, 1, i1i3, cache));

    Graph c4 = Graph::cycle(4);
    CHECK(!can_delete_edge(c4, 0, 1, i1i3, cache));
    CHECK_THROWS_AS((void)can_delete_edge(c4, 0, 2, i1i3, cache), std::invalid_argument);

    CHECK(can_delete_edge(c5_chord(), 0, 2, i1i3, cache));
}

TEST_CASE("edge gluing predicate") {
    MemoCache cache;
    Graph p3 = Graph::path(3);
    CHECK(can_glue_edge(p3, 0, 2, i1i3, cache));

    Graph c4 = Graph::cycle(4);
    CHECK(!can_glue_edge(c4, 0, 2, i1i3, cache));

    Graph c6 = Graph::cycle(6);
    CHECK(!can_glue_edge(c6, 0, 3, i1i3, cache));
    CHECK_THROWS_AS((void)can_glue_edge(c6, 0, 1, i1i3, cache), std::invalid_argument);
}

TEST_CASE("apply_move") {
    MemoCache cache;
    Graph k1(1);
    Graph k2 = apply_move(k1, Move::gluing_vertex(VertexSet(0b1)), i1i3, cache);
    CHECK(k2 == Graph::complete(2));

    Graph p3 = Graph::path(3);
    CHECK(apply_move(p3, Move::gluing_edge(0, 2), i1i3, cache) == Graph::complete(3));

    // deleting an edge and re-gluing the same pair restores the graph
    Graph k4 = Graph::complete(4);
    Graph cut = apply_move(k4, Move::deleting_edge(1, 3), i1i3, cache);
    CHECK(apply_move(cut, Move::gluing_edge(1, 3), i1i3, cache) == k4);

    CHECK_THROWS_WITH_AS(apply_move(Graph::cycle(5), Move::deleting_vertex(0), i1i3, cache),
                         doctest::Contains("I1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(apply_move(Graph::cycle(4), Move::deleting_edge(0, 1), i1i3, cache),
                         doctest::Contains("I3"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(apply_move(Graph::cycle(4), Move::gluing_edge(0, 2), i1i3, cache),
                         doctest::Contains("I4"), std::invalid_argument);
}

TEST_CASE("contractibility verdicts") {
    MemoCache cache;
    CHECK(is_contractible(Graph(1), i1i3, cache));
    CHECK(!is_contractible(Graph::cycle(4), i1i3, cache));
    CHECK(!is_contractible(Graph::cycle(5), i1i3, cache));
    CHECK(!is_contractible(Graph::cycle(6), i1i3, cache));
    for (int n = 2; n <= 10; ++n) CHECK(is_contractible(Graph::complete(n), i1i3, cache));
    for (int n = 2; n <= 10; ++n) CHECK(is_contractible(Graph::path(n), i1i3, cache));
    CHECK(is_contractible(Graph::cycle(3), i1i3, cache));
    CHECK(!is_contractible(Graph(2), i1i3, cache));  // disconnected
}

TEST_CASE("verdicts match the brute-force oracle on all connected graphs up to 6") {
    MemoCache cache;
    oracles::BruteContractible oracle;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            CAPTURE(n);
            CHECK(is_contractible(g, i1i3, cache) == oracle(g));
        }
    }
}

TEST_CASE("certificates replay") {
    MemoCache cache;
    Verdict v = decide_contractible(Graph::complete(5), i1i3, cache);
    REQUIRE(v.contractible);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->steps.size() == 4);
    CHECK(replay_certificate(Graph::complete(5), *v.certificate).ok);

    // an empty step list is a valid certificate for K(1)
    CHECK(replay_certificate(Graph(1), Certificate{}).ok);

    // deleting a C5 vertex first is illegal at step 0
    Certificate bad;
    bad.steps.push_back(Move::deleting_vertex(0));
    ReplayResult r = replay_certificate(Graph::cycle(5), bad);
    CHECK(!r.ok);
    CHECK(r.failed_step == 0);

    // ending early is not a certificate
    Certificate partial;
    partial.steps.push_back(Move::deleting_vertex(2));
    ReplayResult p = replay_certificate(Graph::complete(3), partial);
    CHECK(!p.ok);
    CHECK(p.failed_step == 1);
}

TEST_CASE("contractible vertex sets") {
    MemoCache cache;
    CHECK(contractible_vertices(Graph::complete(4), i1i3, cache) == VertexSet(0b1111));
    CHECK(contractible_vertices(Graph::cycle(6), i1i3, cache).empty());
    CHECK(contractible_vertices(Graph(1), i1i3, cache).empty());
}

TEST_CASE("verdicts imply connectivity and certificates replay cold") {
    MemoCache cache;
    std::mt19937 rng(53);
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            Verdict v = decide_contractible(g, i1i3, cache);
            if (!v.contractible) continue;
            CHECK(g.connected());
            REQUIRE(v.certificate.has_value());
            CHECK(replay_certificate(g, *v.certificate).ok);
        }
    }
}

TEST_CASE("isomorphism invariance of verdicts") {
    MemoCache cache;
    std::mt19937 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = oracles::random_connected_graph(rng, n, 0.45);
        bool base = is_contractible(g, i1i3, cache);
        for (int p = 0; p < 4; ++p) {
            Graph h = g.permuted(oracles::random_permutation(rng, n));
            CHECK(is_contractible(h, i1i3, cache) == base);
        }
    }
}

TEST_CASE("gluing inverts deletion exactly") {
    MemoCache cache;
    std::mt19937 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracles::random_graph(rng, n, 0.4);

        // legal glue-edge then delete-edge on the same pair restores g
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < v; ++u) {
                if (g.adjacent(u, v)) continue;
                if (!can_glue_edge(g, u, v, i1i3, cache)) continue;
                Graph glued = apply_move(g, Move::gluing_edge(u, v), i1i3, cache);
                CHECK(can_delete_edge(glued, u, v, i1i3, cache));
                CHECK(apply_move(glued, Move::deleting_edge(u, v), i1i3, cache) == g);
            }
        }

        // legal glue-vertex then delete-vertex on the new vertex restores g
        if (n < 10) {
            std::uint64_t s = 1 + rng() % (VertexSet::first(n).bits());
            if (can_glue_vertex(g, VertexSet(s), i1i3, cache)) {
                Graph glued = apply_move(g, Move::gluing_vertex(VertexSet(s)), i1i3, cache);
                CHECK(can_delete_vertex(glued, n, i1i3, cache));
                CHECK(apply_move(glued, Move::deleting_vertex(n), i1i3, cache) == g);
            }
        }
    }
}

TEST_CASE("policy monotonicity") {
    MemoCache cache;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            if (is_contractible(g, i1_only, cache)) CHECK(is_contractible(g, i1i3, cache));
            if (is_contractible(g, i1i3, cache)) {
                CHECK(is_contractible(g, Policy{true, 1}, cache));
                CHECK(is_contractible(g, Policy{true, 2}, cache));
            }
        }
    }
}

TEST_CASE("cone verdicts hold without the shortcut") {
    // apex over every connected base up to 5 vertices; the oracle uses no
    // cone special-case at all
    oracles::BruteContractible oracle;
    MemoCache cache;
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& base : connected_graphs(n)) {
            Graph cone = base.with_vertex(base.vertices());
            CHECK(oracle(cone));
            CHECK(is_contractible(cone, i1i3, cache));
        }
    }
}

TEST_CASE("warm and cold caches agree") {
    MemoCache warm;
    std::vector<Graph> pool;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) pool.push_back(g);

    std::vector<bool> first;
    for (const Graph& g : pool) first.push_back(is_contractible(g, i1i3, warm));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        MemoCache cold;
        CHECK(is_contractible(pool[i], i1i3, cold) == first[i]);
        CHECK(is_contractible(pool[i], i1i3, warm) == first[i]);
    }
}

TEST_CASE("cache file persists verdicts") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "contractix_cache_test.txt";
    fs::remove(path);

    {
        MemoCache cache;
        cache.attach_file(path.string());
        CHECK(!is_contractible(Graph::cycle(5), i1i3, cache));
        CHECK(is_contractible(c5_chord().with_edge(0, 3), i1i3, cache));
    }
    {
        MemoCache reloaded;
        CHECK(reloaded.load_file(path.string()) > 0);
        CHECK(!is_contractible(Graph::cycle(5), i1i3, reloaded));
    }
    {
        // a torn final line (simulating a crash mid-append) is skipped
        std::ofstream out(path, std::ios::app);
        out << "deadbeef i1i3";  // no verdict, no newline
    }
    {
        MemoCache reloaded;
        CHECK(reloaded.load_file(path.string()) > 0);
        CHECK(!is_contractible(Graph::cycle(5), i1i3, reloaded));
    }
    fs::remove(path);
}

TEST_CASE("cache tolerates concurrent readers and writers") {
    // the contract: inserts are idempotent, lookups never change a verdict,
    // a lost insert costs time only
    MemoCache cache;
    std::vector<Graph> pool;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) pool.push_back(g);

    std::vector<bool> expected;
    {
        MemoCache reference;
        for (const Graph& g : pool) expected.push_back(is_contractible(g, i1i3, reference));
    }

    std::vector<std::thread> threads;
    std::atomic<bool> mismatch{false};
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t round = 0; round < 3; ++round) {
                for (std::size_t i = t % 2 ? 0 : pool.size() - 1;; t % 2 ? ++i : --i) {
                    std::size_t k = i % pool.size();
                    if (is_contractible(pool[k], i1i3, cache) != expected[k]) mismatch = true;
                    if (t % 2 ? i + 1 >= pool.size() : i == 0) break;
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(!mismatch.load());
    CHECK(cache.entry_count() > 0);
}

TEST_CASE("move text round trips") {
    for (const Move& m : {Move::deleting_vertex(3), Move::deleting_edge(0, 4),
                          Move::gluing_edge(1, 2), Move::gluing_vertex(VertexSet(0b1011))}) {
        auto parsed = parse_move(format_move(m));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == m);
    }
    CHECK(!parse_move("delete-vertex").has_value());
    CHECK(!parse_move("delete-edge 1").has_value());
    CHECK(!parse_move("glue-vertex").has_value());
    CHECK(!parse_move("shrink 1 2").has_value());
    CHECK(!parse_move("delete-vertex 1 2").has_value());
}

TEST_SUITE_END();
