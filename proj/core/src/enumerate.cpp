#include "contractix/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace contractix {

namespace {

constexpr int kMaxEnumerate = 10;  // 55 triangle bits at n=11 still fit the code word

void check_range(int n) {
    if (n < 1 || n > kMaxEnumerate)
        throw std::invalid_argument("enumeration order must be in [1, " +
                                    std::to_string(kMaxEnumerate) + "]");
}

// The canonically designated vertex: highest canonical position whose
// removal keeps the graph connected. Position scanning makes the choice
// isomorphism-consistent up to automorphism, which is all the parent test
// needs.
int designated_vertex(const Graph& g, const CanonicalForm& cf) {
    int n = g.order();
    std::vector<int> at_pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) at_pos[static_cast<std::size_t>(cf.perm[static_cast<std::size_t>(v)])] = v;
    for (int pos = n - 1; pos >= 0; --pos) {
        int v = at_pos[static_cast<std::size_t>(pos)];
        if (g.without_vertex(v).connected()) return v;
    }
    throw std::logic_error("connected graph with no removable vertex");
}

}  // namespace

std::uint64_t level_code(const CanonicalKey& key) {
    std::uint64_t code = 0;
    for (std::size_t i = 1; i < key.bytes.size(); ++i)
        code |= static_cast<std::uint64_t>(static_cast<unsigned char>(key.bytes[i]))
                << (56 - 8 * (i - 1));
    return code;
}

Graph graph_from_level_code(int n, std::uint64_t code) {
    CanonicalKey key;
    std::size_t nbytes = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8;
    key.bytes.resize(nbytes);
    key.bytes[0] = static_cast<char>(n);
    for (std::size_t i = 1; i < nbytes; ++i)
        key.bytes[i] = static_cast<char>((code >> (56 - 8 * (i - 1))) & 0xff);
    return graph_from_key(key);
}

std::vector<std::uint64_t> connected_level_codes(int n) {
    check_range(n);
    std::vector<std::uint64_t> level{0};  // K(1)
    for (int k = 2; k <= n; ++k) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t parent_code : level) {
            Graph parent = graph_from_level_code(k - 1, parent_code);
            CanonicalKey parent_key = canonical_key(parent);
            std::uint64_t subsets = VertexSet::first(k - 1).bits();
            for (std::uint64_t s = 1; s <= subsets; ++s) {
                Graph child = parent.with_vertex(VertexSet(s));
                CanonicalForm cf = canonical_form(child);
                int d = designated_vertex(child, cf);
                // child minus the new vertex is the parent itself, so the
                // augmentation is canonical iff the designated vertex leads
                // back to the same class
                if (d != k - 1 && canonical_key(child.without_vertex(d)) != parent_key) continue;
                next.push_back(level_code(cf.key));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    return level;
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& emit) {
    for (std::uint64_t code : connected_level_codes(n)) emit(graph_from_level_code(n, code));
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    enumerate_connected(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::uint64_t count_connected(int n) {
    return connected_level_codes(n).size();
}

}  // namespace contractix
