#include "minorkit/graph6.hpp"

namespace minorkit {

namespace {

constexpr char kBias = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + kBias));
  out.reserve(1 + body_length(n));
  int acc = 0;
  int filled = 0;
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty string");
  for (char c : text) {
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte " + std::to_string(static_cast<int>(c)) + " outside 63..126");
  }
  if (text[0] == 126) throw CapacityError("graph6: multi-byte order prefix; orders above " + std::to_string(kMaxOrder) + " are not supported");
  const int n = text[0] - kBias;
  if (n > kMaxOrder) throw CapacityError("graph6: order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  const std::string_view body = text.substr(1);
  if (body.size() != body_length(n)) {
    throw Graph6Error("graph6: order " + std::to_string(n) + " needs " + std::to_string(body_length(n)) +
                      " data bytes, got " + std::to_string(body.size()));
  }
  Graph g(n);
  std::size_t index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      const int word = body[index / 6] - kBias;
      if ((word >> (5 - index % 6)) & 1) g.connect(i, j);
    }
  }
  if (index % 6 != 0) {
    const int word = body.back() - kBias;
    if ((word & ((1 << (6 - index % 6)) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace minorkit
