#ifndef CUBIC_GRAPH6_HPP
#define CUBIC_GRAPH6_HPP

#include <string>

#include "cubic/graph.hpp"

namespace cubic {

// graph6 text codec, restricted to orders up to 62 (single-byte header
// n+63). Adjacency bits cover the upper triangle column by column, packed
// six bits per printable byte offset by 63.
CubicGraph parse_graph6(const std::string& line);
std::string write_graph6(const CubicGraph& g);

}  // namespace cubic

#endif
