#include "minorkit/report.hpp"

#include "minorkit/graph6.hpp"

namespace minorkit {

using nlohmann::json;

namespace {

json graph_fields(const Graph& g) {
  return {{"g6", encode_graph6(g)}, {"order", g.order()}, {"size", g.size()}};
}

json obstruction_list(const std::vector<Obstruction>& list) {
  json out = json::array();
  for (const Obstruction& o : list) {
    json entry = graph_fields(o.graph);
    entry["provenance"] = o.provenance;
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<Obstruction> obstructions_from(const json& list) {
  std::vector<Obstruction> out;
  for (const json& entry : list) {
    Graph g = decode_graph6(entry.at("g6").get<std::string>());
    if (g.order() != entry.at("order").get<int>() || g.size() != entry.at("size").get<int>()) {
      throw std::invalid_argument("report entry " + entry.at("g6").get<std::string>() + " has inconsistent order/size");
    }
    out.push_back({std::move(g), entry.value("provenance", "")});
  }
  return out;
}

}  // namespace

json checkpoint_to_json(const MineCheckpoint& checkpoint) {
  return {{"kind", "minorkit-checkpoint"},
          {"schema_version", kReportSchemaVersion},
          {"target", checkpoint.target},
          {"bound", checkpoint.bound},
          {"next_order", checkpoint.next.order},
          {"next_index", checkpoint.next.index},
          {"found", obstruction_list(checkpoint.found)}};
}

MineCheckpoint checkpoint_from_json(const json& doc) {
  const json& body = doc.contains("checkpoint") ? doc.at("checkpoint") : doc;
  if (body.value("kind", "") != "minorkit-checkpoint") throw std::invalid_argument("not a checkpoint document");
  MineCheckpoint out;
  out.target = body.at("target").get<std::string>();
  out.bound = body.at("bound").get<int>();
  out.next.order = body.at("next_order").get<int>();
  out.next.index = body.at("next_index").get<std::size_t>();
  out.found = obstructions_from(body.at("found"));
  return out;
}

json report_to_json(const ObstructionReport& report, bool include_timing) {
  json doc = {{"schema_version", kReportSchemaVersion},
              {"tool_version", kToolVersion},
              {"property", report.property},
              {"target", report.target},
              {"minimality_target", report.minimality_target},
              {"bound", report.bound},
              {"completeness", to_string(report.completeness)},
              {"obstructions", obstruction_list(report.obstructions)},
              {"flags", report.flags}};
  if (!report.candidates.empty()) {
    json list = json::array();
    for (const CandidateRecord& c : report.candidates) {
      json entry = graph_fields(c.graph);
      entry["provenance"] = c.provenance;
      entry["accepted"] = c.accepted;
      if (c.witness) entry["witness_g6"] = encode_graph6(*c.witness);
      list.push_back(std::move(entry));
    }
    doc["candidates"] = std::move(list);
  }
  if (report.checkpoint) doc["checkpoint"] = checkpoint_to_json(*report.checkpoint);
  if (include_timing) doc["runtime_seconds"] = report.runtime_seconds;
  return doc;
}

ObstructionReport report_from_json(const json& doc) {
  const int version = doc.at("schema_version").get<int>();
  if (version != kReportSchemaVersion) throw std::invalid_argument("unsupported report schema " + std::to_string(version));
  ObstructionReport out;
  out.property = doc.at("property").get<std::string>();
  out.target = doc.at("target").get<std::string>();
  out.minimality_target = doc.value("minimality_target", "");
  out.bound = doc.at("bound").get<int>();
  out.completeness = completeness_from_string(doc.at("completeness").get<std::string>());
  out.obstructions = obstructions_from(doc.at("obstructions"));
  out.flags = doc.value("flags", std::vector<std::string>{});
  if (doc.contains("candidates")) {
    for (const json& entry : doc.at("candidates")) {
      CandidateRecord c{decode_graph6(entry.at("g6").get<std::string>()), entry.value("provenance", ""),
                        entry.value("accepted", false), std::nullopt};
      if (entry.contains("witness_g6")) c.witness = decode_graph6(entry.at("witness_g6").get<std::string>());
      out.candidates.push_back(std::move(c));
    }
  }
  if (doc.contains("checkpoint")) out.checkpoint = checkpoint_from_json(doc.at("checkpoint"));
  out.runtime_seconds = doc.value("runtime_seconds", 0.0);
  return out;
}

json verdict_to_json(const SetVerdict& verdict, const std::string& property) {
  json members = json::array();
  for (const MemberVerdict& m : verdict.members) {
    json entry = graph_fields(m.graph);
    entry["name"] = m.name;
    entry["satisfies_target"] = m.satisfies_target;
    entry["minimal"] = m.minimal;
    members.push_back(std::move(entry));
  }
  return {{"schema_version", kReportSchemaVersion},
          {"tool_version", kToolVersion},
          {"property", property},
          {"bound", verdict.bound},
          {"members", members},
          {"layers",
           {{"membership", verdict.membership},
            {"minimality", verdict.minimality},
            {"incomparability", verdict.incomparable},
            {"completeness", verdict.complete}}},
          {"comparable_pairs", verdict.comparable_pairs},
          {"missing", obstruction_list(verdict.missing)},
          {"pass", verdict.pass()}};
}

}  // namespace minorkit
