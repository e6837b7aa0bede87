#include "contractix/graph6.hpp"

#include <istream>

namespace contractix {

namespace {

constexpr int kBias = 63;

[[noreturn]] void fail(Graph6ErrorKind kind, std::size_t offset, const std::string& what) {
    throw Graph6Error(kind, offset, what);
}

}  // namespace

Graph decode_graph6(std::string_view line) {
    if (line.empty()) fail(Graph6ErrorKind::empty_record, 0, "empty record");

    if (line.front() == ':' || line.front() == ';')
        fail(Graph6ErrorKind::unsupported_format, 0, "sparse6 records are not supported");
    if (line.front() == '&')
        fail(Graph6ErrorKind::unsupported_format, 0, "digraph6 records are not supported");

    for (std::size_t i = 0; i < line.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            fail(Graph6ErrorKind::byte_out_of_range, i,
                 "byte " + std::to_string(int{c}) + " outside printable range 63..126");
    }

    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            fail(Graph6ErrorKind::order_too_large, 0, "8-byte size prefix exceeds the 64-vertex cap");
        if (line.size() < 4) fail(Graph6ErrorKind::truncated, line.size(), "size prefix cut short");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | (static_cast<unsigned char>(line[i]) - kBias);
        if (n > Graph::max_order)
            fail(Graph6ErrorKind::order_too_large, 0,
                 "order " + std::to_string(n) + " exceeds the 64-vertex cap");
        if (n < 63)
            fail(Graph6ErrorKind::bad_size_prefix, 0,
                 "non-minimal size prefix: order " + std::to_string(n) + " must use one byte");
        pos = 4;
    } else {
        n = static_cast<unsigned char>(line[0]) - kBias;
        if (n < 1) fail(Graph6ErrorKind::bad_size_prefix, 0, "order must be at least 1");
        pos = 1;
    }

    std::size_t nbits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::size_t ngroups = (nbits + 5) / 6;
    if (line.size() < pos + ngroups)
        fail(Graph6ErrorKind::truncated, line.size(),
             "expected " + std::to_string(ngroups) + " payload bytes, got " +
                 std::to_string(line.size() - pos));
    if (line.size() > pos + ngroups)
        fail(Graph6ErrorKind::trailing_data, pos + ngroups, "unexpected bytes after edge payload");

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            unsigned group = static_cast<unsigned char>(line[pos + k / 6]) - kBias;
            if ((group >> (5 - k % 6)) & 1u) g = g.with_edge(i, j);
        }
    }
    // pad bits beyond the triangle must be zero
    for (; k < ngroups * 6; ++k) {
        unsigned group = static_cast<unsigned char>(line[pos + k / 6]) - kBias;
        if ((group >> (5 - k % 6)) & 1u)
            fail(Graph6ErrorKind::nonzero_padding, pos + k / 6, "nonzero pad bit");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }

    unsigned group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

void for_each_graph6(std::istream& in,
                     const std::function<void(Graph&&, std::size_t line_no)>& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind(">>graph6<<", 0) == 0) {
            line.erase(0, 10);
            if (line.empty()) continue;
        }
        try {
            fn(decode_graph6(line), line_no);
        } catch (const Graph6Error& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

}  // namespace contractix
