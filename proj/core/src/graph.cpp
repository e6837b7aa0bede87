#include "contractix/graph.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace contractix {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > max_order)
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        add_edge_unchecked(u, v);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
    return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

VertexSet Graph::neighborhood(int v) const {
    check_vertex(v);
    return VertexSet(adj_[static_cast<std::size_t>(v)]);
}

VertexSet Graph::common_neighborhood(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("common neighborhood requires distinct vertices");
    return VertexSet(adj_[static_cast<std::size_t>(u)] & adj_[static_cast<std::size_t>(v)]);
}

Graph Graph::induced(VertexSet s) const {
    if (s.empty()) throw std::invalid_argument("induced subgraph on the empty set");
    if ((s.bits() & ~vertices().bits()) != 0)
        throw std::out_of_range("induced set contains vertices outside the graph");

    Graph out(s.count());
    int i = 0;
    for (int v : s) {
        // compress v's neighbor row to the positions of s
        std::uint64_t row = adj_[static_cast<std::size_t>(v)] & s.bits();
        int j = 0;
        for (int u : s) {
            if ((row >> u) & 1u) out.adj_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
            ++j;
        }
        ++i;
    }
    return out;
}

bool Graph::connected() const {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t rest = frontier; rest; rest &= rest - 1)
            next |= adj_[static_cast<std::size_t>(std::countr_zero(rest))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertices().bits();
}

std::optional<int> Graph::cone_apex() const {
    for (int v = 0; v < n_; ++v) {
        std::uint64_t others = vertices().bits() & ~(std::uint64_t{1} << v);
        if (adj_[static_cast<std::size_t>(v)] == others) return v;
    }
    return std::nullopt;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    Graph out = *this;
    out.add_edge_unchecked(u, v);
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph out = *this;
    out.adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    out.adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    return out;
}

Graph Graph::with_vertex(VertexSet attachment) const {
    if (n_ == max_order) throw std::invalid_argument("graph is at the 64-vertex cap");
    if ((attachment.bits() & ~vertices().bits()) != 0)
        throw std::out_of_range("attachment contains vertices outside the graph");
    Graph out(n_ + 1);
    out.adj_ = adj_;
    int v = n_;
    for (int u : attachment) out.add_edge_unchecked(u, v);
    return out;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    if (n_ == 1) throw std::invalid_argument("cannot delete the only vertex");
    VertexSet keep = vertices();
    keep.remove(v);
    return induced(keep);
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size does not match graph order");
    std::uint64_t seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n_) throw std::invalid_argument("permutation entry out of range");
        seen |= std::uint64_t{1} << p;
    }
    if (seen != vertices().bits()) throw std::invalid_argument("not a permutation");

    Graph out(n_);
    for (int v = 0; v < n_; ++v)
        for (int u : neighborhood(v))
            if (u < v) out.add_edge_unchecked(perm[static_cast<std::size_t>(u)],
                                              perm[static_cast<std::size_t>(v)]);
    return out;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[static_cast<std::size_t>(v)] != o.adj_[static_cast<std::size_t>(v)]) return false;
    return true;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge_unchecked(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge_unchecked(v, v + 1);
    return g;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<Graph> g;
    std::optional<int> n;

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);

        if (!n) {
            std::string head;
            if (!(fields >> head)) continue;  // blank line before the header
            if (head != "n") parse_fail(line_no, "expected header 'n <count>'");
            int count = 0;
            if (!(fields >> count)) parse_fail(line_no, "expected vertex count after 'n'");
            if (count < 1 || count > Graph::max_order)
                parse_fail(line_no, "vertex count must be in [1, 64]");
            std::string extra;
            if (fields >> extra) parse_fail(line_no, "unexpected trailing field");
            n = count;
            g.emplace(count);
            continue;
        }

        int u = 0, v = 0;
        if (!(fields >> u)) continue;  // blank or comment-only line
        if (!(fields >> v)) parse_fail(line_no, "expected two vertex labels");
        std::string extra;
        if (fields >> extra) parse_fail(line_no, "unexpected trailing field");
        if (u < 1 || u > *n || v < 1 || v > *n)
            parse_fail(line_no, "vertex label out of range (labels are 1-based)");
        if (u == v) parse_fail(line_no, "loop edge");
        g = g->with_edge(u - 1, v - 1);
    }

    if (!g) throw std::runtime_error("edge list: missing 'n <count>' header");
    return *g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighborhood(v))
            if (u < v) out << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

}  // namespace contractix
