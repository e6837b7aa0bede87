#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "contractix/graph.hpp"

namespace contractix {

/// Complete isomorphism invariant: the lexicographically minimal
/// upper-triangle adjacency bitstring over all vertex permutations,
/// prefixed by the vertex count.
///
/// Bit order is column-major, x(0,1), x(0,2), x(1,2), x(0,3), ... — the same
/// order graph6 uses — packed most-significant-bit first after the leading
/// count byte. Keys of isomorphic graphs are equal; keys of non-isomorphic
/// graphs differ. This is an exact canonical form, not a hash.
struct CanonicalKey {
    std::string bytes;

    int order() const { return static_cast<unsigned char>(bytes.at(0)); }
    bool operator==(const CanonicalKey&) const = default;
    bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }

    std::string hex() const;
    static std::optional<CanonicalKey> from_hex(std::string_view s);
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        return std::hash<std::string>{}(k.bytes);
    }
};

struct CanonicalForm {
    CanonicalKey key;
    std::vector<int> perm;  // perm[old index] = canonical position
};

// Exact minimization by branch-and-bound over vertex orderings: candidates
// sorted by prefix adjacency, pruned by prefix comparison against the best
// string so far, with twin classes and leaf-discovered automorphisms used to
// skip equivalent branches.
CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

// Rebuilds the labeled graph a key encodes.
Graph graph_from_key(const CanonicalKey& key);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace contractix
