#include "minorkit/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>

#include "minorkit/canon.hpp"

namespace minorkit {

namespace {

// Accepts child iff its new vertex (id n-1) lies in the orbit of the vertex
// the canonical labeling puts last, tested as isomorphism of the two
// deletions. Returns the canonical form of accepted children.
bool canonical_child(const Graph& child, const Graph& parent, CanonicalForm& form) {
  const int n = child.order();
  const Vertex added = n - 1;
  int max_degree = 0;
  for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, child.degree(v));
  // Refinement sorts cells by degree, so the canonical last vertex has maximum degree.
  if (child.degree(added) != max_degree) return false;
  CanonicalLabeling labeling = canonical_labeling(child);
  Vertex last = 0;
  while (labeling.position[last] != n - 1) ++last;
  if (last != added && canonical_form(delete_vertex(child, last)).graph() != parent) return false;
  form = std::move(labeling.form);
  return true;
}

}  // namespace

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void sort_layer(std::vector<Graph>& graphs) {
  std::vector<std::pair<int, CanonicalForm>> keyed;
  keyed.reserve(graphs.size());
  for (const Graph& g : graphs) keyed.emplace_back(g.size(), canonical_form(g));
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) graphs[i] = keyed[i].second.graph();
}

GraphEnumerator::GraphEnumerator(int workers, EnumFilter filter)
    : workers_(workers > 0 ? workers : default_workers()), filter_(std::move(filter)) {
  Graph null_graph(0);
  layers_.push_back({null_graph});
}

GraphEnumerator& GraphEnumerator::shared() {
  static GraphEnumerator instance;
  return instance;
}

std::vector<Graph> GraphEnumerator::augment(const std::vector<Graph>& parents, int order) const {
  const int workers = std::max(1, std::min<int>(workers_, static_cast<int>(parents.size())));
  std::vector<std::vector<std::pair<int, CanonicalForm>>> found(workers);
  auto work = [&](int worker) {
    for (std::size_t p = worker; p < parents.size(); p += workers) {
      const Graph& parent = parents[p];
      if (filter_.hereditary && filter_.accept && parent.order() > 0 && !filter_.accept(parent)) continue;
      std::set<CanonicalForm> children;
      Graph base(order);
      for (const Edge& e : parent.edges()) base.connect(e.u, e.v);
      const VertexSet subsets = low_bits(order - 1);
      for (VertexSet s = 0;; ++s) {
        Graph child = base;
        for (VertexSet rest = s; rest != 0; rest &= rest - 1) child.connect(order - 1, __builtin_ctz(rest));
        CanonicalForm form;
        if (canonical_child(child, parent, form) && (!filter_.hereditary || !filter_.accept || filter_.accept(form.graph()))) {
          children.insert(std::move(form));
        }
        if (s == subsets) break;
      }
      for (const CanonicalForm& c : children) found[worker].emplace_back(c.graph().size(), c);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::pair<int, CanonicalForm>> merged;
  for (auto& part : found) merged.insert(merged.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  std::sort(merged.begin(), merged.end());
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (auto& [size, form] : merged) out.push_back(form.graph());
  return out;
}

const std::vector<Graph>& GraphEnumerator::layer(int order) {
  if (order < 0 || order > kMaxEnumerationOrder) {
    throw CapacityError("enumeration order " + std::to_string(order) + " outside 0.." + std::to_string(kMaxEnumerationOrder));
  }
  std::lock_guard lock(mutex_);
  while (static_cast<int>(layers_.size()) <= order) {
    const int next = static_cast<int>(layers_.size());
    layers_.push_back(augment(layers_.back(), next));
  }
  return layers_[order];
}

void GraphEnumerator::for_each(int max_order, const std::function<bool(const Graph&, EnumPosition)>& visit,
                               EnumPosition start) {
  for (int n = std::max(1, start.order); n <= max_order; ++n) {
    const auto& graphs = layer(n);
    for (std::size_t i = n == start.order ? start.index : 0; i < graphs.size(); ++i) {
      if (filter_.accept && !filter_.hereditary && !filter_.accept(graphs[i])) continue;
      if (!visit(graphs[i], {n, i})) return;
    }
  }
}

std::vector<Graph> enumerate_graphs(int max_order, const EnumFilter& filter, int workers) {
  std::vector<Graph> out;
  auto collect = [&out](GraphEnumerator& e, int max) {
    e.for_each(max, [&out](const Graph& g, EnumPosition) {
      out.push_back(g);
      return true;
    });
  };
  if (filter.accept) {
    GraphEnumerator filtered(workers, filter);
    collect(filtered, max_order);
  } else if (workers > 0) {
    GraphEnumerator local(workers);
    collect(local, max_order);
  } else {
    collect(GraphEnumerator::shared(), max_order);
  }
  return out;
}

}  // namespace minorkit
