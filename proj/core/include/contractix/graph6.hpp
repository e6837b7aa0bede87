#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "contractix/graph.hpp"

namespace contractix {

enum class Graph6ErrorKind {
    empty_record,
    byte_out_of_range,
    truncated,
    nonzero_padding,
    order_too_large,
    bad_size_prefix,
    trailing_data,
    unsupported_format,
};

struct Graph6Error : std::runtime_error {
    Graph6Error(Graph6ErrorKind kind, std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what),
          kind(kind),
          offset(offset) {}

    Graph6ErrorKind kind;
    std::size_t offset;  // byte offset within the record
};

// Decodes one graph6 record (without trailing newline). The size prefix is a
// single byte n+63 for n <= 62; the 4-byte form 126,b1,b2,b3 is accepted only
// for n in {63, 64}. Edge bits are upper-triangle, column-major
// x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian in 6-bit groups,
// each group stored as value+63. Pad bits must be zero.
Graph decode_graph6(std::string_view line);

// Exact inverse of decode on its image: minimal-length prefix, zero padding.
std::string encode_graph6(const Graph& g);

// Reads newline-separated records, skipping an optional >>graph6<< header
// and blank lines. Errors are rethrown with the line number prepended.
void for_each_graph6(std::istream& in,
                     const std::function<void(Graph&&, std::size_t line_no)>& fn);

}  // namespace contractix
