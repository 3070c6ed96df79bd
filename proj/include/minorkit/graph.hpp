#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minorkit {

inline constexpr int kMaxOrder = 32;

using Vertex = int;
using VertexSet = std::uint32_t;

/// Thrown when a result would exceed a fixed capacity (order cap, search bounds).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1, adjacency held as one
/// bitmask row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::initializer_list<Edge> edges);
  Graph(int order, std::span<const Edge> edges);

  int order() const { return order_; }
  int size() const;

  bool has_edge(Vertex a, Vertex b) const;
  VertexSet neighbors(Vertex v) const { return adj_[check(v)]; }
  int degree(Vertex v) const;
  VertexSet vertices() const;

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  /// Degrees sorted in non-increasing order.
  std::vector<int> degree_sequence() const;

  // In-place builders; operations below return new values instead.
  void connect(Vertex a, Vertex b);
  void disconnect(Vertex a, Vertex b);

  std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(order_)}; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  Vertex check(Vertex v) const;

  int order_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

inline int popcount(VertexSet s) { return __builtin_popcount(s); }
inline VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline VertexSet low_bits(int n) { return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

bool is_connected(const Graph& g);
int isolated_vertex_count(const Graph& g);

// Minor-forming edits. Vertex ids stay contiguous: ids above a removed vertex
// shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, Edge e);
/// Merges e.v into e.u (the smaller id); parallel edges collapse.
Graph contract_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

Graph disjoint_union(const Graph& a, const Graph& b);
/// Identifies vertex va of a with vertex vb of b. Vertices of b other than vb
/// are appended after a's vertices in their original order.
Graph one_point_union(const Graph& a, Vertex va, const Graph& b, Vertex vb);

/// Relabels g so that vertex v becomes perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

enum class SplitMode {
  partition,  // every neighbour goes to exactly one side
  cover,      // neighbours may also go to both sides
};

struct VertexSplit {
  Graph graph;
  Edge split_edge;      // {v, g.order()}: contracting it gives back g
  int only_a = 0;       // neighbours kept by v only
  int only_b = 0;       // neighbours moved to the new vertex only
  int shared = 0;       // neighbours adjacent to both
};

/// All vertex splits of g at v, one per isomorphism class, ordered by
/// canonical form. The kept vertex is v; the new vertex gets id g.order().
std::vector<VertexSplit> vertex_splits(const Graph& g, Vertex v, SplitMode mode = SplitMode::cover);

// Edge-list text: "n m" on the first line, then one "u v" per edge.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace minorkit
