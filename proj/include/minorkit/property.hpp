#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

enum class NodeKind {
  // atoms
  planar,
  outerplanar,
  truth,
  falsity,
  tw_le,
  edges_le,
  order_le,
  named,  // registry entry, expanded before evaluation
  // connectives
  negation,
  conjunction,
  disjunction,
  // quantifiers; the single child is the predicate
  some_vertex,
  all_vertices,
  some_edge,
  all_edges,
  all_edge_vertex_pairs,
  // predicate operations on the quantified vertex or edge
  remove_vertex,
  delete_edge,
  contract_edge,
};

struct PropertyNode {
  NodeKind kind = NodeKind::truth;
  int k = -1;        // bound of tw_le / edges_le / order_le, count argument of a named entry
  std::string name;  // named entries only
  std::vector<PropertyNode> children;

  friend bool operator==(const PropertyNode&, const PropertyNode&) = default;
};

class PropertyParseError : public std::invalid_argument {
 public:
  PropertyParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Immutable parsed property. text() is the pretty-printed form and
/// identifies the property (memo binding, reports).
class PropertySpec {
 public:
  explicit PropertySpec(PropertyNode root);

  const PropertyNode& root() const { return root_; }
  const std::string& text() const { return text_; }

  /// Throws CapacityError when a tw_le atom meets a graph above order 12.
  bool evaluate(const Graph& g) const;

  /// Minor-closedness backed by a known theorem or by construction.
  bool declared_closed() const;
  /// True for "not P" with P declared closed.
  bool complement_declared_closed() const;
  /// Mentions an order_le bound somewhere (after expansion).
  bool order_sensitive() const;

  PropertySpec negated() const;

 private:
  PropertyNode root_;
  PropertyNode expanded_;
  std::string text_;
};

PropertySpec parse_property(std::string_view text);
PropertyNode parse_property_node(std::string_view text);
std::string print_property(const PropertyNode& node);

enum class RegistryParam { none, count, property };

struct RegistryEntry {
  std::string name;
  RegistryParam param = RegistryParam::none;
  std::string description;
  bool closed = false;  // declared minor-closed (apex: when its argument is)
};

const std::vector<RegistryEntry>& property_registry();

/// Replaces registry references by their definitions, recursively.
PropertyNode expand_named(const PropertyNode& node);

/// Exact tree-width decision by dynamic programming over vertex subsets.
/// Requires order <= 12.
bool treewidth_le(const Graph& g, int k);
int treewidth(const Graph& g);

struct ClosureCounterexample {
  Graph graph;  // satisfies the property
  Graph minor;  // one-step minor that does not
  std::string step;
};

struct MinorClosedness {
  enum class Status { declared_closed, declared_open, empirically_checked };
  Status status = Status::declared_open;
  int bound = 0;
  bool clean = false;
  std::optional<ClosureCounterexample> counterexample;
};

MinorClosedness declared_closedness(const PropertySpec& p);

/// Scans every graph of order <= max_order (max 8) for one satisfying p with
/// a one-step minor that does not. Reports the first in enumeration order.
MinorClosedness check_minor_closed(const PropertySpec& p, int max_order, int workers = 1);

}  // namespace minorkit
