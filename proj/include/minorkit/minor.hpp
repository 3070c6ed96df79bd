#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "minorkit/canon.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

class PropertySpec;

/// Witness for pattern <= host: branch_sets[p] is the host vertex set that
/// pattern vertex p contracts from.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

/// Checks disjointness, connectivity and edge coverage of a model.
bool validate_model(const Graph& host, const Graph& pattern, const MinorModel& model);

std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern);

enum class MinorOp { delete_vertex, delete_edge, contract_edge };

std::string to_string(MinorOp op);

struct OneStepMinor {
  MinorOp op = MinorOp::delete_vertex;
  Vertex vertex = -1;  // locus for delete_vertex
  Edge edge;           // locus for the edge operations
  Graph result;

  std::string locus() const;
};

/// Every vertex deletion, edge deletion and edge contraction of g, one per
/// isomorphism class of the result, keeping the least (op, locus) of each
/// class. Deleting the last vertex of a one-vertex graph is not a step: the
/// null graph never takes part in minor searches.
std::vector<OneStepMinor> one_step_minors(const Graph& g);

/// Canonical forms of the distinct one-step minors.
std::vector<CanonicalForm> one_step_minor_forms(const Graph& g);

/// Bounded LRU cache from canonical form to a boolean, bound to a single
/// property text. Safe to share between threads.
class MinorMemo {
 public:
  explicit MinorMemo(std::string property, std::size_t capacity = std::size_t{1} << 20);

  const std::string& property() const { return property_; }
  std::optional<bool> find(const CanonicalForm& key);
  void insert(const CanonicalForm& key, bool value);
  std::size_t size() const;

 private:
  using Order = std::list<CanonicalForm>;
  struct Slot {
    bool value;
    Order::iterator position;
  };

  std::string property_;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  Order recency_;
  std::unordered_map<CanonicalForm, Slot, CanonicalFormHash> slots_;
};

enum class MinimalityMode { one_step, full };

/// Thrown when one-step minimality is requested for a property whose
/// complement is not declared minor-closed.
class MinimalityModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// True iff some minor of g (g included) satisfies p. Memoized on `memo`,
/// which must be bound to p.
bool contains_property_minor(const Graph& g, const PropertySpec& p, MinorMemo& memo);
bool contains_property_minor(const CanonicalForm& form, const PropertySpec& p, MinorMemo& memo);

/// A proper minor of g satisfying p, if any.
std::optional<Graph> proper_minor_with(const Graph& g, const PropertySpec& p, MinorMemo& memo);

bool is_minor_minimal(const Graph& g, const PropertySpec& p, MinimalityMode mode, MinorMemo* memo = nullptr);

}  // namespace minorkit
