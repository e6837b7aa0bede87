#include <doctest.h>

#include <random>

#include "contractix/contract.hpp"
#include "contractix/enumerate.hpp"
#include "contractix/homology.hpp"
#include "oracles.hpp"

using namespace contractix;

TEST_SUITE_BEGIN("homology");

namespace {

Policy i1i3;

Graph octahedron() {
    // K_{2,2,2}: complement of a perfect matching on 6 vertices
    Graph g = Graph::complete(6);
    g = g.without_edge(0, 1);
    g = g.without_edge(2, 3);
    g = g.without_edge(4, 5);
    return g;
}

bool all_zero(const BettiVector& v) {
    for (long b : v.betti)
        if (b != 0) return false;
    return true;
}

long alternating_sum(const std::vector<long>& xs) {
    long sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) sum += (i % 2 == 0 ? xs[i] : -xs[i]);
    return sum;
}

}  // namespace

TEST_CASE("clique complexes") {
    CliqueComplex k3 = clique_complex(Graph::complete(3), 2);
    CHECK(k3.simplex_count(0) == 3);
    CHECK(k3.simplex_count(1) == 3);
    CHECK(k3.simplex_count(2) == 1);

    CliqueComplex c4 = clique_complex(Graph::cycle(4), 2);
    CHECK(c4.simplex_count(0) == 4);
    CHECK(c4.simplex_count(1) == 4);
    CHECK(c4.simplex_count(2) == 0);
    CHECK(c4.dimension() == 1);  // empty levels are not kept

    CliqueComplex oct = clique_complex(octahedron(), 3);
    CHECK(oct.simplex_count(0) == 6);
    CHECK(oct.simplex_count(1) == 12);
    CHECK(oct.simplex_count(2) == 8);
    CHECK(oct.simplex_count(3) == 0);

    CHECK(clique_number(octahedron()) == 3);
    CHECK(clique_number(Graph::complete(5)) == 5);
    CHECK(clique_number(Graph(3)) == 1);
}

TEST_CASE("faces of listed simplices are listed") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(rng, 8, 0.5);
        CliqueComplex complex = clique_complex(g, clique_number(g) - 1);
        for (int p = 1; p <= complex.dimension(); ++p) {
            for (const VertexSet& s : complex.simplices[static_cast<std::size_t>(p)]) {
                for (int v : s) {
                    VertexSet face = s;
                    face.remove(v);
                    const auto& lower = complex.simplices[static_cast<std::size_t>(p - 1)];
                    bool found = false;
                    for (const VertexSet& t : lower) found = found || t == face;
                    CHECK(found);
                }
            }
        }
    }
}

TEST_CASE("boundary ranks") {
    CliqueComplex k3 = clique_complex(Graph::complete(3), 2);
    CHECK(boundary_rank(k3, 1, CoefficientField::gf2) == 2);
    CHECK(boundary_rank(k3, 2, CoefficientField::gf2) == 1);
    CHECK(boundary_rank(k3, 1, CoefficientField::rational) == 2);

    CliqueComplex c4 = clique_complex(Graph::cycle(4), 2);
    CHECK(boundary_rank(c4, 1, CoefficientField::gf2) == 3);
    CHECK(boundary_rank(c4, 1, CoefficientField::rational) == 3);

    CHECK_THROWS_AS((void)boundary_rank(k3, 0, CoefficientField::gf2), std::invalid_argument);
}

TEST_CASE("boundary composition vanishes") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = oracles::random_graph(rng, 8, 0.6);
        CliqueComplex complex = clique_complex(g, clique_number(g) - 1);
        for (int p = 2; p <= complex.dimension(); ++p) {
            auto a = boundary_matrix(complex, p - 1);
            auto b = boundary_matrix(complex, p);
            if (a.empty() || b.empty()) continue;
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < b[0].size(); ++j) {
                    long long sum = 0;
                    for (std::size_t k = 0; k < b.size(); ++k) sum += a[i][k] * b[k][j];
                    CHECK(sum == 0);
                }
            }
        }
    }
}

TEST_CASE("betti vectors of known spaces") {
    BettiVector c4 = betti_numbers(Graph::cycle(4), CoefficientField::gf2, false);
    CHECK(c4.betti == std::vector<long>{1, 1});

    BettiVector c5 = betti_numbers(Graph::cycle(5), CoefficientField::rational, false);
    CHECK(c5.betti == std::vector<long>{1, 1});

    for (int n = 1; n <= 7; ++n)
        CHECK(all_zero(betti_numbers(Graph::complete(n), CoefficientField::gf2, true)));

    BettiVector oct = betti_numbers(octahedron(), CoefficientField::gf2, false);
    CHECK(oct.betti == std::vector<long>{1, 0, 1});
    BettiVector oct_q = betti_numbers(octahedron(), CoefficientField::rational, false);
    CHECK(oct_q.betti == std::vector<long>{1, 0, 1});

    // unreduced beta_0 counts components
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(betti_numbers(two_triangles, CoefficientField::gf2, false).betti ==
          std::vector<long>{2, 0, 0});
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracles::random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
        CliqueComplex complex = clique_complex(g, clique_number(g) - 1);
        for (CoefficientField field : {CoefficientField::gf2, CoefficientField::rational}) {
            BettiVector betti = betti_from_complex(complex, field, false);
            CHECK(complex.euler_characteristic() == alternating_sum(betti.betti));
        }
    }
}

TEST_CASE("gf2 betti dominates rational betti") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(rng, n, 0.5);
        BettiVector f2 = betti_numbers(g, CoefficientField::gf2, false);
        BettiVector q = betti_numbers(g, CoefficientField::rational, false);
        REQUIRE(f2.betti.size() == q.betti.size());
        for (std::size_t p = 0; p < q.betti.size(); ++p) CHECK(f2.betti[p] >= q.betti[p]);
    }
}

TEST_CASE("contractible graphs have trivial reduced homology") {
    MemoCache cache;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            if (!is_contractible(g, i1i3, cache)) continue;
            CHECK(all_zero(betti_numbers(g, CoefficientField::gf2, true)));
            CHECK(all_zero(betti_numbers(g, CoefficientField::rational, true)));
        }
    }
}

TEST_CASE("smith normal form") {
    CHECK(smith_normal_form({{2, 0}, {0, 3}}).factors == std::vector<long long>{1, 6});
    CHECK(smith_normal_form({{0, 0}, {0, 0}}).factors.empty());
    CHECK(smith_normal_form({{2, 4}, {6, 8}}).factors == std::vector<long long>{2, 4});
    CHECK(smith_normal_form({{1, 0}, {0, 1}}).factors == std::vector<long long>{1, 1});

    // divisibility chain on random small matrices
    std::mt19937 rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<long long>> m(3, std::vector<long long>(4));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(rng() % 7) - 3;
        SNFDiagonal snf = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < snf.factors.size(); ++i) {
            CHECK(snf.factors[i] > 0);
            CHECK(snf.factors[i + 1] % snf.factors[i] == 0);
        }
    }

    // product of invariant factors of a nonsingular matrix is |det|
    for (int trial = 0; trial < 50; ++trial) {
        long long a = static_cast<long long>(rng() % 5) - 2, b = static_cast<long long>(rng() % 5) - 2,
                  c = static_cast<long long>(rng() % 5) - 2, d = static_cast<long long>(rng() % 5) - 2;
        long long det = a * d - b * c;
        if (det == 0) continue;
        SNFDiagonal snf = smith_normal_form({{a, b}, {c, d}});
        REQUIRE(snf.factors.size() == 2);
        CHECK(snf.factors[0] * snf.factors[1] == std::abs(det));
    }
}

TEST_CASE("legal moves preserve betti vectors") {
    MemoCache cache;
    CHECK(check_invariance(Graph::complete(4), Move::deleting_vertex(0), i1i3, cache));
    CHECK(check_invariance(Graph::path(3), Move::gluing_edge(0, 2), i1i3, cache));
    CHECK_THROWS_AS((void)check_invariance(Graph::cycle(4), Move::gluing_edge(0, 2), i1i3, cache),
                    std::invalid_argument);

    std::mt19937 rng(89);
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
        // sample one candidate move of a random kind; skip illegal draws
        Move m = Move::deleting_vertex(0);
        bool legal = false;
        switch (rng() % 4) {
            case 0: {
                int v = static_cast<int>(rng() % n);
                m = Move::deleting_vertex(v);
                legal = can_delete_vertex(g, v, i1i3, cache);
                break;
            }
            case 1: {
                int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                if (u == v || !g.adjacent(u, v)) continue;
                m = Move::deleting_edge(u, v);
                legal = can_delete_edge(g, u, v, i1i3, cache);
                break;
            }
            case 2: {
                int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                if (u == v || g.adjacent(u, v)) continue;
                m = Move::gluing_edge(u, v);
                legal = can_glue_edge(g, u, v, i1i3, cache);
                break;
            }
            default: {
                VertexSet attach{1 + rng() % VertexSet::first(n).bits()};
                m = Move::gluing_vertex(attach);
                legal = can_glue_vertex(g, attach, i1i3, cache);
                break;
            }
        }
        if (!legal) continue;
        CHECK(check_invariance(g, m, i1i3, cache));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_SUITE_END();
