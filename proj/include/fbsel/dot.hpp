#pragma once

#include <string>

#include "fbsel/graphs.hpp"

namespace fbsel {

/// Graphviz rendering. Nodes are named x1.., u1.., y1.. so output is stable
/// across runs; feedback edges are drawn dashed red.
std::string to_dot(const Digraph& d);

/// One node per SCC labelled with its states, inputs and outputs.
std::string to_dot(const Condensation& c);

}  // namespace fbsel
