#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <iomanip>
#include <sstream>

#include "minorkit/canon.hpp"
#include "minorkit/catalog.hpp"
#include "minorkit/enumerate.hpp"
#include "minorkit/graph6.hpp"
#include "minorkit/miner.hpp"
#include "minorkit/property.hpp"
#include "minorkit/report.hpp"

namespace minorkit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Rough footprint of one memo entry (key graph, list node, hash slot).
constexpr std::size_t kMemoEntryBytes = 256;

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph parse_graph_text(const std::string& text) {
  if (text.find_first_of(" \t\n") != std::string::npos) {
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
    if (trimmed.find_first_of(" \t\n") == std::string::npos) return decode_graph6(trimmed);
    return parse_edge_list(text);
  }
  return decode_graph6(text);
}

// Catalog name, inline edge list, file (edge list or graph6), or graph6.
Graph resolve_graph(const std::string& spec) {
  try {
    return catalog_lookup(spec);
  } catch (const std::invalid_argument&) {
  }
  if (spec.find_first_of(" \t\n") == std::string::npos && fs::is_regular_file(spec)) return parse_graph_text(read_file(spec));
  return parse_graph_text(spec);
}

fs::path default_out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  return env != nullptr && *env != '\0' ? fs::path(env) : fs::path("minorkit-out");
}

std::string slug(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(c);
    } else if (!out.empty() && out.back() != '_') {
      out.push_back('_');
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "property" : out;
}

void write_json(const fs::path& path, const json& doc) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write " + path.string());
  file << doc.dump(2) << '\n';
}

// manifest.json beside each written report: one entry per report file.
void update_manifest(const fs::path& report_path, const json& summary) {
  const fs::path manifest = (report_path.has_parent_path() ? report_path.parent_path() : fs::path(".")) / "manifest.json";
  json doc = {{"schema_version", kReportSchemaVersion}, {"reports", json::array()}};
  if (fs::exists(manifest)) doc = json::parse(read_file(manifest));
  json& reports = doc["reports"];
  const std::string file = report_path.filename().string();
  json entry = summary;
  entry["file"] = file;
  bool replaced = false;
  for (json& r : reports) {
    if (r.value("file", "") == file) {
      r = entry;
      replaced = true;
    }
  }
  if (!replaced) reports.push_back(entry);
  write_json(manifest, doc);
}

PropertySpec target_spec(const std::string& property, const std::string& target) {
  const PropertySpec base = parse_property(property);
  if (target == "not") return base.negated();
  if (target == "direct") return base;
  throw std::invalid_argument("--target must be \"not\" or \"direct\"");
}

std::vector<NamedGraph> resolve_set(const std::string& spec) {
  std::vector<NamedGraph> out;
  if (fs::is_regular_file(spec)) {
    const std::string text = read_file(spec);
    if (!text.empty() && text.find('{') != std::string::npos) {
      const ObstructionReport report = report_from_json(json::parse(text));
      for (const Obstruction& o : report.obstructions) out.push_back({encode_graph6(o.graph), o.graph});
      return out;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == '#') continue;
      out.push_back({line, resolve_graph(line)});
    }
    return out;
  }
  for (const std::string& name : expand_name_list(spec)) out.push_back({name, resolve_graph(name)});
  return out;
}

void print_summary(const ObstructionReport& report, std::ostream& out) {
  std::map<std::pair<int, int>, int> table;
  for (const Obstruction& o : report.obstructions) ++table[{o.graph.order(), o.graph.size()}];
  out << report.minimality_target << ": " << report.obstructions.size() << " obstruction(s), "
      << to_string(report.completeness) << ", bound " << report.bound << "\n";
  out << "order  size  count\n";
  for (const auto& [key, count] : table) {
    out << std::setw(5) << key.first << std::setw(6) << key.second << std::setw(7) << count << "\n";
  }
  for (const Obstruction& o : report.obstructions) {
    out << "  " << encode_graph6(o.graph);
    if (auto name = catalog_name_of(o.graph)) out << "  (" << *name << ")";
    out << "  " << o.provenance << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"minorkit: graph minors, forbidden-minor mining and property checks"};
  app.require_subcommand(1);

  std::string property;
  std::string graph_arg;

  auto* eval = app.add_subcommand("eval", "Evaluate a property on a graph");
  eval->add_option("--property,-p", property, "Property expression")->required();
  eval->add_option("--graph,-g", graph_arg, "Catalog name, graph6, edge list text or file")->required();

  std::string target = "not";
  int max_n = 0;
  std::string mode = "exhaustive";
  std::string seeds = "k5,k33";
  std::string ops_text = "sqcup_k2,dotcup_k2,add_edge,vertex_split";
  int rounds = 1;
  std::string out_path;
  std::string resume_path;
  int workers = 0;
  double max_seconds = 0;
  std::size_t max_memory_mb = 0;
  auto* mine = app.add_subcommand("mine", "Mine minor-minimal graphs");
  mine->add_option("--property,-p", property, "Property expression")->required();
  mine->add_option("--target", target, "not: mine obstructions of the property; direct: minimal graphs having it")
      ->check(CLI::IsMember({"not", "direct"}));
  mine->add_option("--max-n", max_n, "Largest order searched (exhaustive mode)");
  mine->add_option("--mode", mode, "exhaustive or constructive")->check(CLI::IsMember({"exhaustive", "constructive"}));
  mine->add_option("--seed", seeds, "Comma-separated seed names (constructive mode)");
  mine->add_option("--ops", ops_text, "Comma-separated augmentation ops (constructive mode)");
  mine->add_option("--rounds", rounds, "Augmentation rounds (constructive mode)");
  mine->add_option("--out", out_path, "Report path (default: $MINORKIT_OUT_DIR/<property>.json)");
  mine->add_option("--resume", resume_path, "Checkpoint or partial report to resume from");
  mine->add_option("--workers", workers, "Worker threads (default: hardware concurrency)");
  mine->add_option("--max-seconds", max_seconds, "Time budget; 0 means none");
  mine->add_option("--max-memory-mb", max_memory_mb, "Memory hint; caps the minor memo");

  std::string set_arg;
  auto* verify = app.add_subcommand("verify", "Verify a candidate obstruction set");
  verify->add_option("--set", set_arg, "Comma-separated names (sap_obstructions or its alias fig3 for the SAP set), a list file or a report")
      ->required();
  verify->add_option("--property,-p", property, "Property expression")->required();
  verify->add_option("--target", target, "not or direct")->check(CLI::IsMember({"not", "direct"}));
  verify->add_option("--max-n", max_n, "Order bound of the completeness scan")->required();
  verify->add_option("--out", out_path, "Verdict path (default: $MINORKIT_OUT_DIR/verify_<property>.json)");
  verify->add_option("--workers", workers, "Worker threads");

  bool count_only = false;
  auto* enumerate = app.add_subcommand("enum", "Enumerate non-isomorphic graphs");
  enumerate->add_option("--max-n", max_n, "Largest order")->required();
  enumerate->add_flag("--count-only", count_only, "Print per-order counts only");

  auto* canon = app.add_subcommand("canon", "Print the canonical graph6 of a graph");
  canon->add_option("--graph,-g", graph_arg, "Catalog name, graph6, edge list text or file")->required();

  std::string in_format;
  std::string out_format;
  std::string input_path;
  auto* convert = app.add_subcommand("convert", "Convert between edge-list and graph6 (stdin or --input)");
  convert->add_option("--in", in_format, "Input format")->required()->check(CLI::IsMember({"edgelist", "g6"}));
  convert->add_option("--out", out_format, "Output format")->required()->check(CLI::IsMember({"edgelist", "g6"}));
  convert->add_option("--input", input_path, "Input file (default: stdin)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*eval) {
      const PropertySpec p = parse_property(property);
      const Graph g = resolve_graph(graph_arg);
      const bool value = p.evaluate(g);
      out << json{{"graph", encode_graph6(g)}, {"property", p.text()}, {"value", value}}.dump() << "\n";
      return value ? kOk : kNegative;
    }
    if (*mine) {
      const PropertySpec spec = target_spec(property, target);
      MineOptions options;
      options.workers = workers;
      options.max_seconds = max_seconds;
      if (max_memory_mb > 0) options.memo_capacity = std::max<std::size_t>(1024, max_memory_mb * (1 << 20) / kMemoEntryBytes);
      ObstructionReport report;
      if (mode == "exhaustive") {
        if (!resume_path.empty()) options.resume = checkpoint_from_json(json::parse(read_file(resume_path)));
        if (max_n == 0) {
          if (!options.resume) throw std::invalid_argument("--max-n is required in exhaustive mode");
          max_n = options.resume->bound;
        }
        report = mine_exhaustive(spec, max_n, options);
      } else {
        std::vector<NamedGraph> seed_graphs;
        for (const std::string& name : expand_name_list(seeds)) seed_graphs.push_back({name, resolve_graph(name)});
        std::set<AugmentOp> ops;
        for (const std::string& op : expand_name_list(ops_text)) ops.insert(augment_op_from_string(op));
        report = mine_constructive(seed_graphs, ops, spec, rounds, options);
      }
      const fs::path path = out_path.empty() ? default_out_dir() / (slug(target + " " + property) + ".json") : fs::path(out_path);
      write_json(path, report_to_json(report));
      update_manifest(path, {{"property", report.property},
                             {"target", report.target},
                             {"bound", report.bound},
                             {"completeness", to_string(report.completeness)},
                             {"count", report.obstructions.size()}});
      print_summary(report, out);
      out << "report: " << path.string() << "\n";
      return report.completeness == Completeness::partial ? kPartial : kOk;
    }
    if (*verify) {
      const PropertySpec spec = target_spec(property, target);
      MineOptions options;
      options.workers = workers;
      const SetVerdict verdict = verify_set(resolve_set(set_arg), spec, max_n, options);
      for (const MemberVerdict& m : verdict.members) {
        out << "  " << m.name << ": target " << (m.satisfies_target ? "holds" : "fails") << ", "
            << (m.minimal ? "minimal" : "not minimal") << "\n";
      }
      for (const std::string& pair : verdict.comparable_pairs) out << "  comparable: " << pair << "\n";
      for (const Obstruction& o : verdict.missing) out << "  missing: " << encode_graph6(o.graph) << "\n";
      auto layer = [&out](const char* name, bool ok) { out << name << ": " << (ok ? "PASS" : "FAIL") << "\n"; };
      layer("membership", verdict.membership);
      layer("minimality", verdict.minimality);
      layer("incomparability", verdict.incomparable);
      layer("completeness", verdict.complete);
      out << "overall: " << (verdict.pass() ? "PASS" : "FAIL") << "\n";
      const fs::path path =
          out_path.empty() ? default_out_dir() / ("verify_" + slug(target + " " + property) + ".json") : fs::path(out_path);
      write_json(path, verdict_to_json(verdict, spec.text()));
      out << "verdict: " << path.string() << "\n";
      return verdict.pass() ? kOk : kNegative;
    }
    if (*enumerate) {
      GraphEnumerator& e = GraphEnumerator::shared();
      for (int n = 1; n <= max_n; ++n) {
        const auto& layer = e.layer(n);
        if (count_only) {
          out << n << ": " << layer.size() << "\n";
        } else {
          for (const Graph& g : layer) out << encode_graph6(g) << "\n";
        }
      }
      return kOk;
    }
    if (*canon) {
      out << canonical_form(resolve_graph(graph_arg)).graph6() << "\n";
      return kOk;
    }
    if (*convert) {
      std::string text;
      if (input_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
      } else {
        text = read_file(input_path);
      }
      std::vector<Graph> graphs;
      if (in_format == "g6") {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
          if (!line.empty()) graphs.push_back(decode_graph6(line));
        }
      } else {
        graphs.push_back(parse_edge_list(text));
      }
      for (const Graph& g : graphs) out << (out_format == "g6" ? encode_graph6(g) + "\n" : format_edge_list(g));
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace minorkit::cli
