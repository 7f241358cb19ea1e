#pragma once

#include <string>

#include "itc/coloring.hpp"
#include "itc/graph.hpp"

namespace itc {

// DOT output with 1-based node ids and color numbers as label attributes.
// Node and edge statements are emitted in index order.
std::string to_dot(const Graph& g);
std::string to_dot(const Graph& g, const TotalColoring& c);
std::string to_dot(const Graph& g, const EdgeColoring& c);

}  // namespace itc
