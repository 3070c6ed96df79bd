#include "minorkit/minor.hpp"

#include <algorithm>
#include <unordered_set>

#include "minorkit/property.hpp"

namespace minorkit {

namespace {

VertexSet neighborhood(const Graph& g, VertexSet set) {
  VertexSet out = 0;
  for (VertexSet rest = set; rest != 0; rest &= rest - 1) out |= g.neighbors(__builtin_ctz(rest));
  return out & ~set;
}

bool connected_within(const Graph& g, VertexSet set) {
  if (set == 0) return false;
  VertexSet seen = set & -set;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f != 0; f &= f - 1) next |= g.neighbors(__builtin_ctz(f));
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

// Places pattern vertices one at a time, each onto a connected host vertex
// set adjacent to the sets of its already placed pattern neighbours.
class ModelSearch {
 public:
  ModelSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    VertexSet pending = 0;
    for (int p = 0; p < pattern.order(); ++p) {
      if (pattern.neighbors(p) != 0) pending |= bit(p);
    }
    isolated_ = pattern.order() - popcount(pending);
    VertexSet placed = 0;
    while (pending != 0) {
      int best = -1;
      std::tuple<int, int> best_key{-1, -1};
      for (VertexSet rest = pending; rest != 0; rest &= rest - 1) {
        const int p = __builtin_ctz(rest);
        const std::tuple<int, int> key{popcount(pattern.neighbors(p) & placed), pattern.degree(p)};
        if (key > best_key) {
          best_key = key;
          best = p;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
      pending &= ~bit(best);
    }
  }

  std::optional<MinorModel> run() {
    if (!place(0)) return std::nullopt;
    MinorModel model;
    model.branch_sets.assign(pattern_.order(), 0);
    VertexSet free = host_.vertices() & ~used_;
    for (int p = 0; p < pattern_.order(); ++p) {
      if (branch_[p] != 0) {
        model.branch_sets[p] = branch_[p];
      } else {
        model.branch_sets[p] = free & -free;
        free &= free - 1;
      }
    }
    return model;
  }

 private:
  bool place(std::size_t index) {
    if (index == order_.size()) return true;
    const int p = order_[index];
    const int remaining = static_cast<int>(order_.size() - index - 1);
    const VertexSet avail = host_.vertices() & ~used_;
    const int budget = popcount(avail) - remaining - isolated_;
    if (budget < 1) return false;

    VertexSet neighbors_of_p = 0;
    int anchor = -1;
    for (std::size_t i = 0; i < index; ++i) {
      if (pattern_.has_edge(p, order_[i])) {
        neighbors_of_p |= bit(order_[i]);
        if (anchor < 0) anchor = order_[i];
      }
    }
    const VertexSet roots = anchor < 0 ? avail : neighborhood(host_, branch_[anchor]) & avail;
    VertexSet excluded = ~avail;
    for (VertexSet rest = roots; rest != 0; rest &= rest - 1) {
      const VertexSet root = rest & -rest;
      if (grow(index, p, neighbors_of_p, root, excluded, avail, budget)) return true;
      excluded |= root;
    }
    return false;
  }

  // Visits every connected set containing `set` and avoiding `excluded`
  // exactly once.
  bool grow(std::size_t index, int p, VertexSet placed_nbrs, VertexSet set, VertexSet excluded, VertexSet avail,
            int budget) {
    if (try_set(index, p, placed_nbrs, set)) return true;
    if (popcount(set) >= budget) return false;
    const VertexSet candidates = neighborhood(host_, set) & avail & ~excluded;
    for (VertexSet rest = candidates; rest != 0; rest &= rest - 1) {
      const VertexSet u = rest & -rest;
      if (grow(index, p, placed_nbrs, set | u, excluded, avail, budget)) return true;
      excluded |= u;
    }
    return false;
  }

  bool try_set(std::size_t index, int p, VertexSet placed_nbrs, VertexSet set) {
    const VertexSet touch = neighborhood(host_, set);
    for (VertexSet rest = placed_nbrs; rest != 0; rest &= rest - 1) {
      if ((touch & branch_[__builtin_ctz(rest)]) == 0) return false;
    }
    branch_[p] = set;
    used_ |= set;
    if (feasible(index) && place(index + 1)) return true;
    used_ &= ~set;
    branch_[p] = 0;
    return false;
  }

  // Each placed vertex needs a distinct free host neighbour per unplaced
  // pattern neighbour.
  bool feasible(std::size_t index) const {
    const VertexSet avail = host_.vertices() & ~used_;
    VertexSet unplaced = 0;
    for (std::size_t i = index + 1; i < order_.size(); ++i) unplaced |= bit(order_[i]);
    for (std::size_t i = 0; i <= index; ++i) {
      const int q = order_[i];
      const int need = popcount(pattern_.neighbors(q) & unplaced);
      if (need > 0 && popcount(neighborhood(host_, branch_[q]) & avail) < need) return false;
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  int isolated_ = 0;
  std::array<VertexSet, kMaxOrder> branch_{};
  VertexSet used_ = 0;
};

}  // namespace

bool validate_model(const Graph& host, const Graph& pattern, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != pattern.order()) return false;
  VertexSet used = 0;
  for (VertexSet set : model.branch_sets) {
    if (set == 0 || (set & ~host.vertices()) != 0 || (set & used) != 0) return false;
    if (!connected_within(host, set)) return false;
    used |= set;
  }
  for (const Edge& e : pattern.edges()) {
    if ((neighborhood(host, model.branch_sets[e.u]) & model.branch_sets[e.v]) == 0) return false;
  }
  return true;
}

std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
  if (pattern.order() == 0) return MinorModel{};
  return ModelSearch(host, pattern).run();
}

std::string to_string(MinorOp op) {
  switch (op) {
    case MinorOp::delete_vertex:
      return "delete-vertex";
    case MinorOp::delete_edge:
      return "delete-edge";
    case MinorOp::contract_edge:
      return "contract-edge";
  }
  return "?";
}

std::string OneStepMinor::locus() const {
  if (op == MinorOp::delete_vertex) return std::to_string(vertex);
  return std::to_string(edge.u) + "-" + std::to_string(edge.v);
}

std::vector<OneStepMinor> one_step_minors(const Graph& g) {
  std::vector<OneStepMinor> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  auto offer = [&](OneStepMinor step) {
    if (seen.insert(canonical_form(step.result)).second) out.push_back(std::move(step));
  };
  if (g.order() > 1) {
    for (int v = 0; v < g.order(); ++v) offer({MinorOp::delete_vertex, v, {}, delete_vertex(g, v)});
  }
  const auto edges = g.edges();
  for (const Edge& e : edges) offer({MinorOp::delete_edge, -1, e, delete_edge(g, e)});
  for (const Edge& e : edges) offer({MinorOp::contract_edge, -1, e, contract_edge(g, e)});
  return out;
}

std::vector<CanonicalForm> one_step_minor_forms(const Graph& g) {
  std::vector<CanonicalForm> out;
  auto offer = [&out](const Graph& m) {
    CanonicalForm form = canonical_form(m);
    if (std::find(out.begin(), out.end(), form) == out.end()) out.push_back(std::move(form));
  };
  if (g.order() > 1) {
    for (int v = 0; v < g.order(); ++v) offer(delete_vertex(g, v));
  }
  const auto edges = g.edges();
  for (const Edge& e : edges) offer(delete_edge(g, e));
  for (const Edge& e : edges) offer(contract_edge(g, e));
  return out;
}

MinorMemo::MinorMemo(std::string property, std::size_t capacity)
    : property_(std::move(property)), capacity_(std::max<std::size_t>(capacity, 1)) {}

std::optional<bool> MinorMemo::find(const CanonicalForm& key) {
  std::lock_guard lock(mutex_);
  const auto it = slots_.find(key);
  if (it == slots_.end()) return std::nullopt;
  recency_.splice(recency_.begin(), recency_, it->second.position);
  return it->second.value;
}

void MinorMemo::insert(const CanonicalForm& key, bool value) {
  std::lock_guard lock(mutex_);
  const auto it = slots_.find(key);
  if (it != slots_.end()) {
    it->second.value = value;
    recency_.splice(recency_.begin(), recency_, it->second.position);
    return;
  }
  if (slots_.size() >= capacity_) {
    slots_.erase(recency_.back());
    recency_.pop_back();
  }
  recency_.push_front(key);
  slots_.emplace(key, Slot{value, recency_.begin()});
}

std::size_t MinorMemo::size() const {
  std::lock_guard lock(mutex_);
  return slots_.size();
}

namespace {

void check_binding(const PropertySpec& p, const MinorMemo& memo) {
  if (memo.property() != p.text()) {
    throw std::invalid_argument("memo bound to \"" + memo.property() + "\" used with \"" + p.text() + "\"");
  }
}

bool contains_form(const CanonicalForm& form, const PropertySpec& p, MinorMemo& memo) {
  if (auto hit = memo.find(form)) return *hit;
  bool value = p.evaluate(form.graph());
  if (!value) {
    for (const CanonicalForm& m : one_step_minor_forms(form.graph())) {
      if (contains_form(m, p, memo)) {
        value = true;
        break;
      }
    }
  }
  memo.insert(form, value);
  return value;
}

}  // namespace

bool contains_property_minor(const Graph& g, const PropertySpec& p, MinorMemo& memo) {
  check_binding(p, memo);
  return contains_form(canonical_form(g), p, memo);
}

bool contains_property_minor(const CanonicalForm& form, const PropertySpec& p, MinorMemo& memo) {
  check_binding(p, memo);
  return contains_form(form, p, memo);
}

std::optional<Graph> proper_minor_with(const Graph& g, const PropertySpec& p, MinorMemo& memo) {
  check_binding(p, memo);
  for (const CanonicalForm& m : one_step_minor_forms(g)) {
    if (!contains_form(m, p, memo)) continue;
    CanonicalForm current = m;
    while (!p.evaluate(current.graph())) {
      for (const CanonicalForm& next : one_step_minor_forms(current.graph())) {
        if (contains_form(next, p, memo)) {
          current = next;
          break;
        }
      }
    }
    return current.graph();
  }
  return std::nullopt;
}

bool is_minor_minimal(const Graph& g, const PropertySpec& p, MinimalityMode mode, MinorMemo* memo) {
  if (mode == MinimalityMode::one_step) {
    if (!p.complement_declared_closed()) {
      throw MinimalityModeError("one-step minimality needs the complement of \"" + p.text() +
                                "\" to be declared minor-closed");
    }
    if (!p.evaluate(g)) return false;
    for (const CanonicalForm& m : one_step_minor_forms(g)) {
      if (p.evaluate(m.graph())) return false;
    }
    return true;
  }
  if (!p.evaluate(g)) return false;
  MinorMemo local(p.text());
  MinorMemo& table = memo != nullptr ? *memo : local;
  check_binding(p, table);
  for (const CanonicalForm& m : one_step_minor_forms(g)) {
    if (contains_form(m, p, table)) return false;
  }
  return true;
}

}  // namespace minorkit
