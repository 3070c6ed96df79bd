#include "minorkit/catalog.hpp"

#include <charconv>
#include <stdexcept>

#include "minorkit/canon.hpp"

namespace minorkit {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.connect(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.connect(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.connect(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.connect(v, v + 1);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.connect(i, (i + 1) % 5);
    g.connect(i, i + 5);
    g.connect(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

namespace {

Graph octahedron() {
  Graph g = complete_graph(6);
  for (int i = 0; i < 3; ++i) g.disconnect(i, i + 3);
  return g;
}

// Moebius ladder on eight vertices.
Graph wagner_v8() {
  Graph g = cycle_graph(8);
  for (int i = 0; i < 4; ++i) g.connect(i, i + 4);
  return g;
}

Graph pentagonal_prism() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.connect(i, (i + 1) % 5);
    g.connect(i + 5, (i + 1) % 5 + 5);
    g.connect(i, i + 5);
  }
  return g;
}

// Split of vertex 0: it keeps `kept` of its neighbours (plus the new vertex);
// the new vertex takes the rest.
Graph split_first_vertex(const Graph& g, int kept) {
  Graph out(g.order() + 1);
  const int fresh = g.order();
  for (const Edge& e : g.edges()) {
    if (e.u != 0) out.connect(e.u, e.v);
  }
  int seen = 0;
  for (VertexSet row = g.neighbors(0); row != 0; row &= row - 1, ++seen) {
    out.connect(seen < kept ? 0 : fresh, __builtin_ctz(row));
  }
  out.connect(0, fresh);
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  const Graph k5 = complete_graph(5);
  const Graph k33 = complete_bipartite(3, 3);
  const Graph k2 = complete_graph(2);
  Graph k33e = k33;
  k33e.connect(0, 1);
  Graph k33ee = k33e;
  k33ee.connect(3, 4);
  return {
      {"k1", complete_graph(1), "single vertex", "standard"},
      {"k2", k2, "single edge", "standard"},
      {"k3", complete_graph(3), "triangle", "standard"},
      {"k4", complete_graph(4), "complete graph on four vertices", "standard; sole tree-width-2 obstruction"},
      {"k5", k5, "complete graph on five vertices", "Kuratowski graph"},
      {"k23", complete_bipartite(2, 3), "complete bipartite K2,3", "standard; outerplanarity obstruction"},
      {"k33", k33, "complete bipartite K3,3 with parts {0,1,2} and {3,4,5}", "Kuratowski graph"},
      {"two_k2", disjoint_union(k2, k2), "two disjoint edges", "standard"},
      {"petersen", petersen_graph(), "Petersen graph: outer 5-cycle, spokes, inner pentagram", "standard"},
      {"octahedron", octahedron(), "K2,2,2", "standard; tree-width-3 obstruction"},
      {"wagner_v8", wagner_v8(), "Wagner graph V8 (Moebius ladder on 8 vertices)", "standard; tree-width-3 obstruction"},
      {"pentagonal_prism", pentagonal_prism(), "prism over a pentagon", "standard; tree-width-3 obstruction"},
      {"k33_plus_e", k33e, "K3,3 plus the edge 0-1 inside a part", "SAP obstruction: K3,3 plus an edge"},
      {"k33_plus_2e", k33ee, "K3,3 plus one edge inside each part",
       "balanced vertex split of K5; not SAP but contains k33_plus_e"},
      {"k5_sqcup_k2", disjoint_union(k5, k2), "K5 and a disjoint edge", "SAP obstruction: disjoint union with K2"},
      {"k33_sqcup_k2", disjoint_union(k33, k2), "K3,3 and a disjoint edge", "SAP obstruction: disjoint union with K2"},
      {"k5_dotcup_k2", one_point_union(k5, 0, k2, 0), "K5 with a pendant edge at vertex 0",
       "SAP obstruction: one-point union with K2"},
      {"k33_dotcup_k2", one_point_union(k33, 0, k2, 0), "K3,3 with a pendant edge at vertex 0",
       "SAP obstruction: one-point union with K2"},
      {"k5_bar", split_first_vertex(k5, 1), "K5 with vertex 0 split; 0 keeps one old neighbour, new vertex 5 the other three",
       "SAP obstruction: split where the new edge contracts back to K5"},
      {"k33_bar", split_first_vertex(k33, 1), "K3,3 with vertex 0 split; 0 keeps one old neighbour, new vertex 6 the other two",
       "SAP obstruction: split where the new edge contracts back to K3,3"},
  };
}

bool parse_count(std::string_view text, int& out) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// k<n> (single digit), k<a><b> (two digits: bipartite), k_<n>, k_<a>_<b>,
// c<n>, p<n>, e<n> / empty<n>.
bool parametric(std::string_view name, Graph& out) {
  int a = 0;
  int b = 0;
  if (name.starts_with("k_")) {
    const std::string_view rest = name.substr(2);
    const auto sep = rest.find('_');
    if (sep == std::string_view::npos) {
      if (!parse_count(rest, a)) return false;
      out = complete_graph(a);
      return true;
    }
    if (!parse_count(rest.substr(0, sep), a) || !parse_count(rest.substr(sep + 1), b)) return false;
    out = complete_bipartite(a, b);
    return true;
  }
  if (name.size() >= 2 && name[0] == 'k') {
    const std::string_view digits = name.substr(1);
    if (digits.size() == 1 && parse_count(digits, a)) {
      out = complete_graph(a);
      return true;
    }
    if (digits.size() == 2 && parse_count(digits.substr(0, 1), a) && parse_count(digits.substr(1), b)) {
      out = complete_bipartite(a, b);
      return true;
    }
    return false;
  }
  if (name.starts_with("empty") && parse_count(name.substr(5), a)) {
    out = empty_graph(a);
    return true;
  }
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'p' || name[0] == 'e') && parse_count(name.substr(1), a)) {
    out = name[0] == 'c' ? cycle_graph(a) : name[0] == 'p' ? path_graph(a) : empty_graph(a);
    return true;
  }
  return false;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

Graph catalog_lookup(std::string_view name) {
  for (const CatalogEntry& entry : catalog_entries()) {
    if (entry.name == name) return entry.graph;
  }
  Graph g;
  if (parametric(name, g)) return g;
  throw std::invalid_argument("unknown graph name \"" + std::string(name) + "\"");
}

std::optional<std::string> catalog_name_of(const Graph& g) {
  const CanonicalForm key = canonical_form(g);
  for (const CatalogEntry& entry : catalog_entries()) {
    if (entry.graph.order() == g.order() && entry.graph.size() == g.size() && canonical_form(entry.graph) == key) {
      return entry.name;
    }
  }
  return std::nullopt;
}

const std::vector<std::string>& sap_obstruction_names() {
  static const std::vector<std::string> names = {"k5_sqcup_k2",  "k33_sqcup_k2", "k5_dotcup_k2", "k33_dotcup_k2",
                                                 "k5_bar",       "k33_bar",      "k33_plus_e"};
  return names;
}

std::vector<std::string> expand_name_list(std::string_view list) {
  std::vector<std::string> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "fig3" || item == "sap_obstructions") {
      out.insert(out.end(), sap_obstruction_names().begin(), sap_obstruction_names().end());
    } else if (!item.empty()) {
      out.emplace_back(item);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace minorkit
