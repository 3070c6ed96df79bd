#include "minorkit/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "minorkit/canon.hpp"

namespace minorkit {

namespace {

std::string vertex_message(Vertex v, int order) {
  return "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order);
}

// Removes vertex v from every row and closes the gap in the bit positions.
VertexSet drop_bit(VertexSet row, Vertex v) {
  const VertexSet low = row & low_bits(v);
  const VertexSet high = v + 1 >= 32 ? 0 : (row >> (v + 1)) << v;
  return low | high;
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw CapacityError("graph order " + std::to_string(order) + " outside 0.." + std::to_string(kMaxOrder));
  }
}

Graph::Graph(int order, std::initializer_list<Edge> edges) : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) connect(e.u, e.v);
}

Vertex Graph::check(Vertex v) const {
  if (v < 0 || v >= order_) throw std::out_of_range(vertex_message(v, order_));
  return v;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  return (adj_[check(a)] & bit(check(b))) != 0;
}

int Graph::degree(Vertex v) const { return popcount(adj_[check(v)]); }

VertexSet Graph::vertices() const { return low_bits(order_); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (VertexSet rest = adj_[u] & ~low_bits(u + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(u, __builtin_ctz(rest));
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(order_);
  for (int v = 0; v < order_; ++v) out.push_back(popcount(adj_[v]));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void Graph::connect(Vertex a, Vertex b) {
  check(a);
  check(b);
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a) + " not allowed");
  adj_[a] |= bit(b);
  adj_[b] |= bit(a);
}

void Graph::disconnect(Vertex a, Vertex b) {
  check(a);
  check(b);
  adj_[a] &= ~bit(b);
  adj_[b] &= ~bit(a);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = bit(0);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(__builtin_ctz(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices();
}

int isolated_vertex_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.neighbors(v) == 0;
  return count;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range(vertex_message(v, g.order()));
  Graph out(g.order() - 1);
  for (int u = 0, w = 0; u < g.order(); ++u) {
    if (u == v) continue;
    for (VertexSet row = drop_bit(g.neighbors(u), v); row != 0; row &= row - 1) {
      const int x = __builtin_ctz(row);
      if (x > w) out.connect(w, x);
    }
    ++w;
  }
  return out;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
  }
  Graph out = g;
  out.disconnect(e.u, e.v);
  return out;
}

Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not present");
  }
  Graph merged = g;
  for (VertexSet row = g.neighbors(e.v) & ~bit(e.u); row != 0; row &= row - 1) {
    merged.connect(e.u, __builtin_ctz(row));
  }
  return delete_vertex(merged, e.v);
}

Graph add_edge(const Graph& g, Edge e) {
  if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u) + " not allowed");
  if (g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " already present");
  }
  Graph out = g;
  out.connect(e.u, e.v);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > kMaxOrder) throw CapacityError("disjoint union would have " + std::to_string(n) + " vertices");
  Graph out(n);
  for (const Edge& e : a.edges()) out.connect(e.u, e.v);
  for (const Edge& e : b.edges()) out.connect(e.u + a.order(), e.v + a.order());
  return out;
}

Graph one_point_union(const Graph& a, Vertex va, const Graph& b, Vertex vb) {
  if (va < 0 || va >= a.order()) throw std::out_of_range(vertex_message(va, a.order()));
  if (vb < 0 || vb >= b.order()) throw std::out_of_range(vertex_message(vb, b.order()));
  const int n = a.order() + b.order() - 1;
  if (n > kMaxOrder) throw CapacityError("one-point union would have " + std::to_string(n) + " vertices");
  std::vector<int> map(b.order());
  for (int x = 0, next = a.order(); x < b.order(); ++x) map[x] = x == vb ? va : next++;
  Graph out(n);
  for (const Edge& e : a.edges()) out.connect(e.u, e.v);
  for (const Edge& e : b.edges()) out.connect(map[e.u], map[e.v]);
  return out;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation length does not match order");
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.connect(perm[e.u], perm[e.v]);
  return out;
}

std::vector<VertexSplit> vertex_splits(const Graph& g, Vertex v, SplitMode mode) {
  if (v < 0 || v >= g.order()) throw std::out_of_range(vertex_message(v, g.order()));
  if (g.order() + 1 > kMaxOrder) throw CapacityError("vertex split would exceed the order cap");
  std::vector<Vertex> nbrs;
  for (VertexSet row = g.neighbors(v); row != 0; row &= row - 1) nbrs.push_back(__builtin_ctz(row));
  const int d = static_cast<int>(nbrs.size());
  if (d > 16) throw CapacityError("vertex splits enumerate 3^degree assignments; degree " + std::to_string(d) + " too large");

  const int choices = mode == SplitMode::cover ? 3 : 2;
  const Vertex b = g.order();
  Graph base(g.order() + 1);
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) base.connect(e.u, e.v);
  }
  base.connect(v, b);

  std::map<CanonicalForm, VertexSplit> classes;
  std::vector<int> digit(d, 0);
  for (;;) {
    VertexSplit split{base, Edge(v, b)};
    for (int i = 0; i < d; ++i) {
      // 0: kept vertex only, 1: new vertex only, 2: both
      if (digit[i] != 1) split.graph.connect(v, nbrs[i]);
      if (digit[i] != 0) split.graph.connect(b, nbrs[i]);
      (digit[i] == 0 ? split.only_a : digit[i] == 1 ? split.only_b : split.shared)++;
    }
    classes.try_emplace(canonical_form(split.graph), std::move(split));
    int i = 0;
    while (i < d && ++digit[i] == choices) digit[i++] = 0;
    if (i == d) break;
  }
  std::vector<VertexSplit> out;
  out.reserve(classes.size());
  for (auto& [key, split] : classes) out.push_back(std::move(split));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header \"n m\"");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts in header");
  if (n > kMaxOrder) throw CapacityError("edge list: order " + std::to_string(n) + " exceeds cap");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long a = 0;
    long long b = 0;
    if (!(in >> a >> b)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("edge list: endpoint out of range in edge " + std::to_string(i));
    if (a == b) throw std::invalid_argument("edge list: loop in edge " + std::to_string(i));
    if (g.has_edge(static_cast<int>(a), static_cast<int>(b))) throw std::invalid_argument("edge list: repeated edge " + std::to_string(i));
    g.connect(static_cast<int>(a), static_cast<int>(b));
  }
  std::string trailing;
  if (in >> trailing) throw std::invalid_argument("edge list: trailing content \"" + trailing + "\"");
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace minorkit
