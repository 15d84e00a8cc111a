#pragma once

#include <string>

#include "blab/graph.hpp"

namespace blab {

// graph6 codec.  Supports the one-byte header (n <= 62) and the four-byte
// header (63 <= n <= 258047); larger orders are rejected.  parse throws
// std::invalid_argument on malformed input (bad header, byte out of the
// printable 63..126 range, wrong length, nonzero padding).
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

}  // namespace blab
