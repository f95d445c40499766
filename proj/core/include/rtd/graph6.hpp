#pragma once

#include <string>
#include <string_view>

#include "rtd/graph.hpp"

namespace rtd {

// graph6: size prefix, then the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into 6-bit
// groups, each offset by 63. No trailing newline is produced.
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and a trailing '\n'.
// Throws ParseError with the byte offset of the first bad character.
Graph from_graph6(std::string_view line);

}  // namespace rtd
