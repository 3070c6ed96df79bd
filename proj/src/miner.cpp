#include "minorkit/miner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <utility>

#include "minorkit/canon.hpp"
#include "minorkit/catalog.hpp"
#include "minorkit/graph6.hpp"
#include "minorkit/minor.hpp"
#include "minorkit/parallel.hpp"

namespace minorkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void describe_target(const PropertySpec& target, ObstructionReport& report) {
  report.minimality_target = target.text();
  if (target.root().kind == NodeKind::negation) {
    report.property = print_property(target.root().children[0]);
    report.target = "not";
  } else {
    report.property = target.text();
    report.target = "direct";
  }
}

bool obstruction_less(const Obstruction& a, const Obstruction& b) {
  const auto ka = std::make_tuple(a.graph.order(), a.graph.size(), canonical_form(a.graph));
  const auto kb = std::make_tuple(b.graph.order(), b.graph.size(), canonical_form(b.graph));
  return ka < kb;
}

void add_structure_flags(const PropertySpec& target, ObstructionReport& report) {
  if (target.order_sensitive()) {
    report.flags.push_back("order-sensitive property: obstructions may be padded with isolated vertices");
  }
  const bool padded = std::any_of(report.obstructions.begin(), report.obstructions.end(),
                                  [](const Obstruction& o) { return isolated_vertex_count(o.graph) > 0; });
  if (padded) report.flags.push_back("some obstructions contain isolated vertices");
}

std::string label_of(const Graph& g) {
  if (auto name = catalog_name_of(g)) return *name;
  return encode_graph6(canonical_form(g).graph());
}

}  // namespace

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::complete_to_bound:
      return "complete-to-bound";
    case Completeness::constructive_only:
      return "constructive-only";
    case Completeness::partial:
      return "partial";
  }
  return "?";
}

Completeness completeness_from_string(const std::string& text) {
  if (text == "complete-to-bound") return Completeness::complete_to_bound;
  if (text == "constructive-only") return Completeness::constructive_only;
  if (text == "partial") return Completeness::partial;
  throw std::invalid_argument("unknown completeness \"" + text + "\"");
}

std::string to_string(AugmentOp op) {
  switch (op) {
    case AugmentOp::sqcup_k2:
      return "sqcup_k2";
    case AugmentOp::dotcup_k2:
      return "dotcup_k2";
    case AugmentOp::add_edge:
      return "add_edge";
    case AugmentOp::vertex_split:
      return "vertex_split";
  }
  return "?";
}

AugmentOp augment_op_from_string(const std::string& text) {
  for (AugmentOp op : {AugmentOp::sqcup_k2, AugmentOp::dotcup_k2, AugmentOp::add_edge, AugmentOp::vertex_split}) {
    if (to_string(op) == text) return op;
  }
  throw std::invalid_argument("unknown augmentation op \"" + text + "\" (sqcup_k2, dotcup_k2, add_edge, vertex_split)");
}

// ---------------------------------------------------------------------------

ObstructionReport mine_exhaustive(const PropertySpec& target, int max_order, const MineOptions& options) {
  if (max_order < 1 || max_order > 9) throw CapacityError("exhaustive mining supports orders 1..9");
  const auto start_time = Clock::now();
  const int workers = options.workers > 0 ? options.workers : default_workers();

  ObstructionReport report;
  describe_target(target, report);
  report.bound = max_order;

  EnumPosition position;
  if (options.resume) {
    if (options.resume->target != target.text() || options.resume->bound != max_order) {
      throw std::invalid_argument("checkpoint was written for \"" + options.resume->target + "\" to order " +
                                  std::to_string(options.resume->bound));
    }
    position = options.resume->next;
    report.obstructions = options.resume->found;
  }

  // Memo of "some minor satisfies the target"; for a graph whose one-step
  // minors all miss the target, minimality reduces to the target itself.
  MinorMemo memo(target.text(), options.memo_capacity);
  struct Outcome {
    bool contains = false;
    bool minimal = false;
  };

  for (int n = std::max(1, position.order); n <= max_order; ++n) {
    const auto& graphs = GraphEnumerator::shared().layer(n);
    std::size_t i = n == position.order ? position.index : 0;
    while (i < graphs.size()) {
      if (options.max_seconds > 0 && seconds_since(start_time) > options.max_seconds) {
        report.completeness = Completeness::partial;
        report.checkpoint = MineCheckpoint{target.text(), max_order, {n, i}, report.obstructions};
        report.flags.push_back("time budget exhausted; resume from order " + std::to_string(n) + " index " +
                               std::to_string(i));
        report.runtime_seconds = seconds_since(start_time);
        return report;
      }
      // One batch per edge count: one-step minors of a batch live in earlier batches.
      std::size_t end = i;
      while (end < graphs.size() && graphs[end].size() == graphs[i].size()) ++end;
      std::vector<Outcome> outcomes(end - i);
      parallel_for(end - i, workers, [&](std::size_t k) {
        const Graph& g = graphs[i + k];
        for (const CanonicalForm& m : one_step_minor_forms(g)) {
          if (contains_property_minor(m, target, memo)) {
            outcomes[k].contains = true;
            return;
          }
        }
        outcomes[k].contains = outcomes[k].minimal = target.evaluate(g);
      });
      for (std::size_t k = 0; k < outcomes.size(); ++k) {
        memo.insert(CanonicalForm(graphs[i + k]), outcomes[k].contains);
        if (outcomes[k].minimal) {
          report.obstructions.push_back(
              {graphs[i + k], "enumeration order=" + std::to_string(n) + " index=" + std::to_string(i + k)});
        }
      }
      i = end;
    }
  }

  // Independent full-mode re-certification of the survivors.
  MinorMemo recheck(target.text(), options.memo_capacity);
  for (const Obstruction& o : report.obstructions) {
    if (!is_minor_minimal(o.graph, target, MinimalityMode::full, &recheck)) {
      throw std::logic_error("mined graph " + encode_graph6(o.graph) + " failed full-mode re-certification");
    }
  }
  std::sort(report.obstructions.begin(), report.obstructions.end(), obstruction_less);
  report.completeness = Completeness::complete_to_bound;
  report.flags.push_back("complete to order " + std::to_string(max_order) + " only; larger obstructions are not searched");
  add_structure_flags(target, report);
  report.runtime_seconds = seconds_since(start_time);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct Derived {
  Graph graph;
  std::string step;
};

std::vector<Derived> augment(const Graph& g, AugmentOp op) {
  std::vector<Derived> out;
  const Graph k2 = complete_graph(2);
  switch (op) {
    case AugmentOp::sqcup_k2:
      out.push_back({disjoint_union(g, k2), "sqcup K2"});
      break;
    case AugmentOp::dotcup_k2:
      for (int v = 0; v < g.order(); ++v) {
        out.push_back({one_point_union(g, v, k2, 0), "dotcup K2 at " + std::to_string(v)});
      }
      break;
    case AugmentOp::add_edge:
      for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
          if (!g.has_edge(u, v)) {
            out.push_back({add_edge(g, {u, v}), "add edge " + std::to_string(u) + "-" + std::to_string(v)});
          }
        }
      }
      break;
    case AugmentOp::vertex_split:
      for (int v = 0; v < g.order(); ++v) {
        for (VertexSplit& s : vertex_splits(g, v, SplitMode::partition)) {
          const int lo = std::min(s.only_a, s.only_b);
          const int hi = std::max(s.only_a, s.only_b);
          out.push_back({std::move(s.graph),
                         "split(" + std::to_string(lo) + "," + std::to_string(hi) + ") at " + std::to_string(v)});
        }
      }
      break;
  }
  return out;
}

}  // namespace

ObstructionReport mine_constructive(const std::vector<NamedGraph>& seeds, const std::set<AugmentOp>& ops,
                                    const PropertySpec& target, int rounds, const MineOptions& options) {
  if (seeds.empty()) throw std::invalid_argument("constructive mining needs at least one seed");
  if (rounds < 0) throw std::invalid_argument("rounds must be non-negative");
  const auto start_time = Clock::now();
  const int workers = options.workers > 0 ? options.workers : default_workers();

  ObstructionReport report;
  describe_target(target, report);
  report.completeness = Completeness::constructive_only;

  std::vector<CandidateRecord> pool;
  std::map<CanonicalForm, std::size_t> index;
  std::vector<std::size_t> frontier;
  auto offer = [&](const Graph& g, std::string provenance) {
    CanonicalForm key = canonical_form(g);
    if (index.count(key) != 0) return;
    index.emplace(key, pool.size());
    frontier.push_back(pool.size());
    pool.push_back({g, std::move(provenance), false, std::nullopt});
  };
  for (const NamedGraph& seed : seeds) offer(seed.graph, seed.name.empty() ? "seed " + encode_graph6(seed.graph) : seed.name);

  for (int round = 0; round < rounds; ++round) {
    const std::vector<std::size_t> current = std::exchange(frontier, {});
    for (std::size_t at : current) {
      for (AugmentOp op : ops) {
        for (Derived& d : augment(pool[at].graph, op)) {
          offer(d.graph, pool[at].provenance + " -> " + d.step);
        }
      }
    }
  }

  for (const CandidateRecord& c : pool) report.bound = std::max(report.bound, c.graph.order());

  struct Verdict {
    bool holds = false;
    bool minimal = false;
  };
  std::vector<Verdict> verdicts(pool.size());
  MinorMemo memo(target.text(), options.memo_capacity);
  parallel_for(pool.size(), workers, [&](std::size_t i) {
    verdicts[i].holds = target.evaluate(pool[i].graph);
    verdicts[i].minimal = verdicts[i].holds && is_minor_minimal(pool[i].graph, target, MinimalityMode::full, &memo);
  });

  for (std::size_t i = 0; i < pool.size(); ++i) {
    CandidateRecord& c = pool[i];
    if (!verdicts[i].holds) {
      c.provenance += " -> reject: target fails";
      continue;
    }
    if (verdicts[i].minimal) {
      c.accepted = true;
      c.provenance += " -> accept";
      report.obstructions.push_back({canonical_form(c.graph).graph(), c.provenance});
      continue;
    }
    // Prefer another target-satisfying candidate as the witness.
    for (std::size_t j = 0; j < pool.size() && !c.witness; ++j) {
      const Graph& other = pool[j].graph;
      if (j == i || !verdicts[j].holds) continue;
      if (other.order() > c.graph.order() || other.size() > c.graph.size()) continue;
      if (other.order() == c.graph.order() && other.size() == c.graph.size()) continue;
      if (has_minor(c.graph, other)) c.witness = other;
    }
    if (!c.witness) c.witness = proper_minor_with(c.graph, target, memo);
    c.provenance += " -> reject: non-minimal, contains " + label_of(*c.witness);
  }
  std::sort(report.obstructions.begin(), report.obstructions.end(), obstruction_less);
  report.candidates = std::move(pool);
  report.flags.push_back("constructive search only; completeness not claimed");
  add_structure_flags(target, report);
  report.runtime_seconds = seconds_since(start_time);
  return report;
}

// ---------------------------------------------------------------------------

SetVerdict verify_set(const std::vector<NamedGraph>& candidates, const PropertySpec& target, int max_order,
                      const MineOptions& options) {
  SetVerdict verdict;
  verdict.bound = max_order;
  MinorMemo memo(target.text(), options.memo_capacity);
  for (const NamedGraph& c : candidates) {
    MemberVerdict m{c.name, c.graph};
    m.satisfies_target = target.evaluate(c.graph);
    m.minimal = m.satisfies_target && is_minor_minimal(c.graph, target, MinimalityMode::full, &memo);
    verdict.membership = verdict.membership && m.satisfies_target;
    verdict.minimality = verdict.minimality && m.minimal;
    verdict.members.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (i == j) continue;
      const bool same_class = are_isomorphic(candidates[i].graph, candidates[j].graph);
      if (same_class && j < i) continue;
      if (same_class || has_minor(candidates[j].graph, candidates[i].graph)) {
        verdict.incomparable = false;
        verdict.comparable_pairs.push_back(candidates[i].name + (same_class ? " == " : " <= ") + candidates[j].name);
      }
    }
  }
  const ObstructionReport mined = mine_exhaustive(target, max_order, options);
  for (const Obstruction& o : mined.obstructions) {
    const bool listed = std::any_of(candidates.begin(), candidates.end(),
                                    [&](const NamedGraph& c) { return are_isomorphic(c.graph, o.graph); });
    if (!listed) verdict.missing.push_back(o);
  }
  verdict.complete = verdict.missing.empty();
  return verdict;
}

}  // namespace minorkit
