#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minorkit/enumerate.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/property.hpp"

namespace minorkit {

inline constexpr const char* kToolVersion = "minorkit 1.0.0";
inline constexpr int kReportSchemaVersion = 1;

enum class Completeness { complete_to_bound, constructive_only, partial };

std::string to_string(Completeness c);
Completeness completeness_from_string(const std::string& text);

struct Obstruction {
  Graph graph;  // canonical labeling
  std::string provenance;
};

/// Constructive-mode bookkeeping for every graph considered.
struct CandidateRecord {
  Graph graph;
  std::string provenance;  // derivation chain, ending with the verdict
  bool accepted = false;
  std::optional<Graph> witness;  // proper minor satisfying the target, for non-minimal rejects
};

struct MineCheckpoint {
  std::string target;  // text of the mined property
  int bound = 0;
  EnumPosition next;
  std::vector<Obstruction> found;
};

struct ObstructionReport {
  std::string property;           // positive property text
  std::string target;             // "not" or "direct"
  std::string minimality_target;  // text of the property whose minor-minimal graphs were mined
  int bound = 0;
  Completeness completeness = Completeness::complete_to_bound;
  std::vector<Obstruction> obstructions;  // sorted by (order, size, canonical key)
  std::vector<CandidateRecord> candidates;
  std::vector<std::string> flags;
  std::optional<MineCheckpoint> checkpoint;
  double runtime_seconds = 0;
};

struct MineOptions {
  int workers = 0;           // 0: hardware concurrency
  double max_seconds = 0;    // 0: unlimited
  std::optional<MineCheckpoint> resume;
  std::size_t memo_capacity = std::size_t{1} << 20;
};

/// Exactly the minor-minimal graphs for `target` among all graphs of order
/// <= max_order (max 9).
ObstructionReport mine_exhaustive(const PropertySpec& target, int max_order, const MineOptions& options = {});

enum class AugmentOp { sqcup_k2, dotcup_k2, add_edge, vertex_split };

std::string to_string(AugmentOp op);
AugmentOp augment_op_from_string(const std::string& text);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Closes `seeds` under `ops` for `rounds` rounds (vertex splits are
/// partitions of the neighbourhood) and keeps the candidates that satisfy
/// `target` and are minor-minimal for it.
ObstructionReport mine_constructive(const std::vector<NamedGraph>& seeds, const std::set<AugmentOp>& ops,
                                    const PropertySpec& target, int rounds, const MineOptions& options = {});

struct MemberVerdict {
  std::string name;
  Graph graph;
  bool satisfies_target = false;
  bool minimal = false;
};

struct SetVerdict {
  int bound = 0;
  std::vector<MemberVerdict> members;
  bool membership = true;    // every candidate satisfies the target
  bool minimality = true;    // every candidate is minor-minimal
  bool incomparable = true;  // no candidate is a minor of another
  std::vector<std::string> comparable_pairs;  // "a <= b"
  bool complete = true;      // exhaustive scan to the bound finds nothing else
  std::vector<Obstruction> missing;

  bool pass() const { return membership && minimality && incomparable && complete; }
};

SetVerdict verify_set(const std::vector<NamedGraph>& candidates, const PropertySpec& target, int max_order,
                      const MineOptions& options = {});

}  // namespace minorkit
