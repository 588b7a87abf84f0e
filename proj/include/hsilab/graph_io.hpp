#pragma once

#include "hsilab/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hsilab {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per printable byte (value + 63).
// An optional ">>graph6<<" prefix is accepted when decoding.
[[nodiscard]] SimpleGraph decode_graph6(std::string_view text);
[[nodiscard]] std::string encode_graph6(const SimpleGraph& g);

/// One graph per non-empty line; blank lines and surrounding whitespace are ignored.
[[nodiscard]] std::vector<SimpleGraph> read_graph6_stream(std::istream& in);

// Edge-list form "n; i-j,i-j,..." with 1-based labels, e.g. "3; 1-2,2-3".
[[nodiscard]] SimpleGraph parse_edge_list(std::string_view text);
[[nodiscard]] std::string format_edge_list(const SimpleGraph& g);

/// Accepts either form: text containing ';' is an edge list, anything else graph6.
[[nodiscard]] SimpleGraph parse_graph(std::string_view text);

} // namespace hsilab
