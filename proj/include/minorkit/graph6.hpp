#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "minorkit/graph.hpp"

namespace minorkit {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// graph6 encoding (single-byte order prefix; orders above the 32 cap are
/// rejected on both sides).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

}  // namespace minorkit
