#include "minorkit/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace minorkit {

namespace {

// Working copy on a vertex subset; rows may reference removed vertices only
// through `alive`.
struct Reducer {
  std::array<VertexSet, kMaxOrder> adj{};
  VertexSet alive = 0;

  explicit Reducer(const Graph& g) : alive(g.vertices()) {
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  }

  void remove(int v) {
    for (VertexSet row = adj[v]; row != 0; row &= row - 1) adj[__builtin_ctz(row)] &= ~bit(v);
    adj[v] = 0;
    alive &= ~bit(v);
  }

  // Drops vertices of degree <= 1 and suppresses degree-2 vertices; neither
  // changes planarity.
  void reduce() {
    for (bool changed = true; changed;) {
      changed = false;
      for (VertexSet rest = alive; rest != 0; rest &= rest - 1) {
        const int v = __builtin_ctz(rest);
        const int d = popcount(adj[v]);
        if (d <= 1) {
          remove(v);
          changed = true;
        } else if (d == 2) {
          const int a = __builtin_ctz(adj[v]);
          const int b = 31 - __builtin_clz(adj[v]);
          remove(v);
          adj[a] |= bit(b);
          adj[b] |= bit(a);
          changed = true;
        }
      }
    }
  }

  int order() const { return popcount(alive); }
  int size() const {
    int twice = 0;
    for (VertexSet rest = alive; rest != 0; rest &= rest - 1) twice += popcount(adj[__builtin_ctz(rest)]);
    return twice / 2;
  }
};

bool boyer_myrvold(const Reducer& r) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  std::array<int, kMaxOrder> id{};
  int n = 0;
  for (VertexSet rest = r.alive; rest != 0; rest &= rest - 1) id[__builtin_ctz(rest)] = n++;
  BoostGraph bg(n);
  for (VertexSet rest = r.alive; rest != 0; rest &= rest - 1) {
    const int u = __builtin_ctz(rest);
    for (VertexSet row = r.adj[u] & ~low_bits(u + 1); row != 0; row &= row - 1) {
      boost::add_edge(id[u], id[__builtin_ctz(row)], bg);
    }
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

bool is_planar(const Graph& g) {
  if (g.order() <= 4 || g.size() <= 8) return true;
  if (g.size() > 3 * g.order() - 6) return false;
  Reducer r(g);
  r.reduce();
  const int n = r.order();
  const int m = r.size();
  if (n <= 4 || m <= 8) return true;
  if (m > 3 * n - 6) return false;
  return boyer_myrvold(r);
}

bool is_outerplanar(const Graph& g) {
  if (g.order() >= kMaxOrder) throw CapacityError("outerplanarity test needs room for one extra vertex");
  if (g.order() <= 3) return true;
  if (g.size() > 2 * g.order() - 3) return false;
  Graph apex(g.order() + 1);
  for (const Edge& e : g.edges()) apex.connect(e.u, e.v);
  for (int v = 0; v < g.order(); ++v) apex.connect(v, g.order());
  return is_planar(apex);
}

}  // namespace minorkit
