#include <doctest.h>

#include <set>

#include "contractix/enumerate.hpp"
#include "oracles.hpp"

using namespace contractix;

TEST_SUITE_BEGIN("enumerate");

namespace {

// independent oracle: every labeled graph, filtered connected, bucketed by
// canonical key
std::set<std::string> brute_connected_keys(int n) {
    std::set<std::string> keys;
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g = oracles::graph_from_mask(n, mask);
        if (g.connected()) keys.insert(canonical_key(g).bytes);
    }
    return keys;
}

}  // namespace

TEST_CASE("counts match the published connected-graph sequence") {
    CHECK(count_connected(1) == 1);
    CHECK(count_connected(2) == 1);
    CHECK(count_connected(3) == 2);
    CHECK(count_connected(4) == 6);
    CHECK(count_connected(5) == 21);
    CHECK(count_connected(6) == 112);
}

TEST_CASE("enumeration equals the brute-force key set") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> expected = brute_connected_keys(n);
        std::set<std::string> got;
        std::string last;
        enumerate_connected(n, [&](const Graph& g) {
            CHECK(g.order() == n);
            CHECK(g.connected());
            CanonicalKey key = canonical_key(g);
            // emitted in ascending canonical-key order, already canonical
            CHECK(key.bytes > last);
            last = key.bytes;
            CHECK(graph_from_key(key) == g);
            got.insert(key.bytes);
        });
        CHECK(got == expected);
    }
}

TEST_CASE("level codes round trip") {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t code : connected_level_codes(n)) {
            Graph g = graph_from_level_code(n, code);
            CHECK(level_code(canonical_key(g)) == code);
        }
    }
}

TEST_CASE("order bounds") {
    CHECK_THROWS_AS(count_connected(0), std::invalid_argument);
    CHECK_THROWS_AS(count_connected(11), std::invalid_argument);
}

TEST_SUITE_END();
