#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

inline constexpr int kMaxEnumerationOrder = 10;

/// Restartable position in the enumeration stream.
struct EnumPosition {
  int order = 1;
  std::size_t index = 0;
};

/// Keeps only graphs passing `accept`. When `hereditary` is set the predicate
/// must be closed under vertex deletion; parents that fail it are then not
/// augmented and stream indices count filtered graphs only.
struct EnumFilter {
  std::function<bool(const Graph&)> accept;
  bool hereditary = false;
};

/// One representative per isomorphism class for each order, produced by
/// canonical augmentation. Each layer holds canonical graphs sorted by
/// (size, canonical key). Layers are computed once and cached.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(int workers = 0, EnumFilter filter = {});

  const std::vector<Graph>& layer(int order);

  /// Visits graphs from `start` through `max_order` in stream order; stops
  /// early when the visitor returns false.
  void for_each(int max_order, const std::function<bool(const Graph&, EnumPosition)>& visit,
                EnumPosition start = {});

  /// Process-wide unfiltered enumerator.
  static GraphEnumerator& shared();

 private:
  std::vector<Graph> augment(const std::vector<Graph>& parents, int order) const;

  int workers_;
  EnumFilter filter_;
  std::mutex mutex_;
  std::vector<std::vector<Graph>> layers_;  // index = order; layer 0 is the null graph
};

/// Graphs of order 1..max_order in stream order.
std::vector<Graph> enumerate_graphs(int max_order, const EnumFilter& filter = {}, int workers = 0);

/// Sorted by (size, canonical key); equal-order inputs assumed.
void sort_layer(std::vector<Graph>& graphs);

int default_workers();

}  // namespace minorkit
