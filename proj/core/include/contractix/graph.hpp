#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace contractix {

/// Set of vertex indices in [0, 64), backed by a single machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    // {0, 1, ..., n-1}
    static constexpr VertexSet first(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    // lowest vertex, or -1 when empty
    constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;

    // iterates set members in ascending order
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on 1..64 labeled vertices.
///
/// Adjacency is stored as one neighbor bitset per vertex, so neighborhood
/// queries and set intersections are single-word operations. All mutating
/// operations return a new value.
class Graph {
public:
    static constexpr int max_order = 64;

    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);
    Graph(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const;  // number of edges

    bool adjacent(int u, int v) const;
    int degree(int v) const { return neighborhood(v).count(); }

    // N_G(v)
    VertexSet neighborhood(int v) const;
    // N_G(u,v) = N_G(u) & N_G(v); u and v must be distinct
    VertexSet common_neighborhood(int u, int v) const;

    VertexSet vertices() const { return VertexSet::first(n_); }

    // Subgraph induced by s, vertices relabeled 0..|s|-1 in ascending original
    // order. s must be nonempty and within range.
    Graph induced(VertexSet s) const;

    bool connected() const;

    // apex vertex adjacent to all others, if any (lowest such index)
    std::optional<int> cone_apex() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    // appends a new vertex with index order() adjacent to exactly `attachment`
    Graph with_vertex(VertexSet attachment) const;
    // removes v, relabeling higher vertices down by one
    Graph without_vertex(int v) const;

    // perm[old] = new position; must be a permutation of 0..n-1
    Graph permuted(std::span<const int> perm) const;

    bool operator==(const Graph& o) const;

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

private:
    void add_edge_unchecked(int u, int v);
    void check_vertex(int v) const;

    int n_;
    std::array<std::uint64_t, max_order> adj_{};
};

// Edge-list text format: first line "n <count>", then one "u v" pair per
// line with 1-based labels. Blank lines and '#' comments are ignored.
// Throws std::runtime_error with a line reference on malformed input.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace contractix
