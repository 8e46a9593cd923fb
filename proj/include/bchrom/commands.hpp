#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bchrom/gadget.hpp"
#include "bchrom/graph.hpp"
#include "bchrom/graph_io.hpp"
#include "bchrom/solver.hpp"

namespace bchrom::cli {

constexpr int kSchemaVersion = 1;

/// What a subcommand produced. `out` is the machine-readable stream, `err`
/// carries diagnostics only.
struct CommandOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Budgets from the environment (BCHROM_NODE_BUDGET, BCHROM_TIME_BUDGET),
/// falling back to 1e8 nodes and 300 s.
SolveConfig default_solve_config();

/// Reads a file, or standard input for "-".
std::string read_input(const std::string& path);

/// Parses with an explicit format name, or sniffs when `format` is "auto".
Graph load_graph(const std::string& text, const std::string& format);

nlohmann::json roles_to_json(const RoleMap& roles, const SizeReport& sizes);
RoleMap roles_from_json(const nlohmann::json& j);

nlohmann::json analysis_report(const Graph& g, bool solve, const SolveConfig& cfg);
nlohmann::json solve_report(const Graph& g, const SolveConfig& cfg);
nlohmann::json verify_paper_report(const GadgetParams& p, bool solve, const SolveConfig& cfg);

struct GenOptions {
  GadgetParams params;
  std::string format = "graph6";
  std::string output = "-";
  std::optional<std::string> sidecar;  // defaults to <output>.roles.json
};
CommandOutput cmd_gen(const GenOptions& o);

struct AnalyzeOptions {
  std::string input = "-";
  std::string format = "auto";
  bool solve = false;
  SolveConfig cfg = default_solve_config();
};
CommandOutput cmd_analyze(const AnalyzeOptions& o);
CommandOutput cmd_solve(const AnalyzeOptions& o);

struct VerifyOptions {
  GadgetParams params;
  bool solve = false;
  SolveConfig cfg = default_solve_config();
};
CommandOutput cmd_verify_paper(const VerifyOptions& o);

struct TreeOptions {
  std::string action;  // pivoted | goodset | classify | witness | encircles | dist2
  std::string input = "-";
  std::string format = "auto";
  std::optional<std::string> w;  // "1,2,3" or "0-1,2-3"
  std::optional<VertexId> v;
  std::uint64_t node_budget = 10'000'000;
};
CommandOutput cmd_tree(const TreeOptions& o);

struct ConvertOptions {
  std::string input = "-";
  std::string from = "auto";
  std::string to = "edge-list";  // edge-list | graph6 | dot | linegraph | roottree
  std::string format = "edge-list";  // graph format for linegraph/roottree output
  std::string output = "-";
  std::optional<std::string> map;    // mapping sidecar; defaults to <output>.map.json
  std::optional<std::string> roles;  // gen sidecar, enables role-colored DOT
};
CommandOutput cmd_convert(const ConvertOptions& o);

/// W-spec parsing: comma-separated ids, or comma-separated u-v pairs.
std::vector<VertexId> parse_vertex_list(const std::string& spec);
std::vector<EdgeId> parse_edge_spec(const std::string& spec);

}  // namespace bchrom::cli
