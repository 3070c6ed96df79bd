#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Isomorphism-invariant key: the adjacency rows of the canonically relabeled
/// graph. Equal keys iff isomorphic graphs.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(Graph canonical) : graph_(std::move(canonical)) {}

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  std::string graph6() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b);

 private:
  Graph graph_;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& key) const;
};

struct CanonicalLabeling {
  std::vector<int> position;  // position[v]: label of v in the canonical graph
  CanonicalForm form;
};

/// Partition refinement plus individualization, pruned by the automorphisms
/// discovered along the way; the least leaf encoding wins.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace minorkit
