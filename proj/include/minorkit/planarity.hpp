#pragma once

#include "minorkit/graph.hpp"

namespace minorkit {

bool is_planar(const Graph& g);

/// Planar after adding a vertex adjacent to every vertex. Requires order <= 31.
bool is_outerplanar(const Graph& g);

}  // namespace minorkit
