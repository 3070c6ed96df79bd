#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();

struct CatalogEntry {
  std::string name;
  Graph graph;
  std::string description;
  std::string anchor;  // where the construction comes from
};

/// Fixed named entries (parametric families such as k7, c5, p4, k_3_4 are
/// resolved by catalog_lookup but not listed here).
const std::vector<CatalogEntry>& catalog_entries();

/// Throws std::invalid_argument for unknown names.
Graph catalog_lookup(std::string_view name);

/// Name of the first fixed catalog entry isomorphic to g.
std::optional<std::string> catalog_name_of(const Graph& g);

/// Names of the seven strongly-almost-planar obstructions, also available as
/// the set name "fig3".
const std::vector<std::string>& sap_obstruction_names();

/// Expands a comma-separated list of names; the group "fig3" expands to the
/// seven obstruction names.
std::vector<std::string> expand_name_list(std::string_view list);

}  // namespace minorkit
