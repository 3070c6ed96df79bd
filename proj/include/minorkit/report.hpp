#pragma once

#include <json.hpp>

#include "minorkit/miner.hpp"

namespace minorkit {

/// Report document. Without timing the dump is byte-identical across runs
/// and worker counts.
nlohmann::json report_to_json(const ObstructionReport& report, bool include_timing = true);
ObstructionReport report_from_json(const nlohmann::json& doc);

nlohmann::json checkpoint_to_json(const MineCheckpoint& checkpoint);
MineCheckpoint checkpoint_from_json(const nlohmann::json& doc);

nlohmann::json verdict_to_json(const SetVerdict& verdict, const std::string& property);

}  // namespace minorkit
