#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "contractix/canonical.hpp"
#include "contractix/graph.hpp"

namespace contractix {

// One representative per isomorphism class of connected graphs on n vertices
// (1 <= n <= 10), in ascending canonical-key order. Built level by level:
// each (n-1)-class is augmented with a new last vertex over every nonempty
// neighbor subset, children are kept only when the removed canonical
// designated vertex reproduces the parent class, and each level is
// deduplicated by canonical key.
void enumerate_connected(int n, const std::function<void(const Graph&)>& emit);

std::vector<Graph> connected_graphs(int n);
std::uint64_t count_connected(int n);

// Packed canonical codes for one level: the key's triangle bits MSB-aligned
// in a single word, so numeric order equals canonical-key order. This is the
// representation the hunt shards and checkpoints over.
std::vector<std::uint64_t> connected_level_codes(int n);
Graph graph_from_level_code(int n, std::uint64_t code);
std::uint64_t level_code(const CanonicalKey& key);

}  // namespace contractix
