// bchrom: generate, analyze and solve b-coloring instances from the command line.

#include <iostream>

#include "CLI11.hpp"

#include "bchrom/commands.hpp"

namespace {

int emit(const bchrom::cli::CommandOutput& res) {
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}

void add_budget_flags(CLI::App* cmd, bchrom::SolveConfig& cfg) {
  cmd->add_option("--node-budget", cfg.node_budget, "Search node budget (env BCHROM_NODE_BUDGET)");
  cmd->add_option("--time-budget", cfg.time_budget_seconds, "Time budget in seconds (env BCHROM_TIME_BUDGET)");
  cmd->add_option("--seed", cfg.seed, "Seed recorded with the run");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bchrom::cli;
  CLI::App app{"b-chromatic number toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  bool gen_disconnected = false;
  auto* gen_cmd = app.add_subcommand("gen", "Build the r,k gadget construction");
  gen_cmd->add_option("--r", gen.params.r, "Number of gadget copies")->required();
  gen_cmd->add_option("--k", gen.params.k, "Size of the S cliques")->required();
  gen_cmd->add_flag("--disconnected", gen_disconnected, "Skip the connecting edges (allows k = r)");
  gen_cmd->add_option("--format", gen.format, "graph6 | edge-list | dot")->capture_default_str();
  gen_cmd->add_option("--output,-o", gen.output, "Output path, - for stdout")->capture_default_str();
  gen_cmd->add_option("--sidecar", gen.sidecar, "Role/size JSON path (default <output>.roles.json)");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Recognizers, m-degree, dense set, tightness");
  analyze_cmd->add_option("input", analyze.input, "Graph file, - for stdin")->capture_default_str();
  analyze_cmd->add_option("--format", analyze.format, "auto | edge-list | graph6")->capture_default_str();
  analyze_cmd->add_flag("--solve", analyze.solve, "Also compute b and chi within the budgets");
  add_budget_flags(analyze_cmd, analyze.cfg);

  AnalyzeOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact b-chromatic and chromatic numbers");
  solve_cmd->add_option("input", solve.input, "Graph file, - for stdin")->capture_default_str();
  solve_cmd->add_option("--format", solve.format, "auto | edge-list | graph6")->capture_default_str();
  add_budget_flags(solve_cmd, solve.cfg);

  VerifyOptions verify;
  bool verify_disconnected = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Build, audit and certify the construction");
  verify_cmd->add_option("--r", verify.params.r, "Number of gadget copies")->required();
  verify_cmd->add_option("--k", verify.params.k, "Size of the S cliques")->required();
  verify_cmd->add_flag("--disconnected", verify_disconnected, "Skip the connecting edges (allows k = r)");
  verify_cmd->add_flag("--solve", verify.solve, "Also attempt the exact b-chromatic number");
  add_budget_flags(verify_cmd, verify.cfg);

  TreeOptions tree;
  auto* tree_cmd = app.add_subcommand("tree", "Pivoted / good-set / inner-outer / witness predicates");
  tree_cmd->add_option("action", tree.action, "pivoted | goodset | classify | witness | encircles | dist2")
      ->required()
      ->check(CLI::IsMember({"pivoted", "goodset", "classify", "witness", "encircles", "dist2"}));
  tree_cmd->add_option("input", tree.input, "Graph file, - for stdin")->capture_default_str();
  tree_cmd->add_option("--format", tree.format, "auto | edge-list | graph6")->capture_default_str();
  tree_cmd->add_option("--w", tree.w, "W-spec: 1,2,3 (vertices) or 0-1,2-3 (edges)");
  tree_cmd->add_option("--v", tree.v, "Vertex for encircles / dist2");
  tree_cmd->add_option("--node-budget", tree.node_budget, "Good-set search budget")->capture_default_str();

  ConvertOptions convert;
  auto* convert_cmd = app.add_subcommand("convert", "Format conversion, line graph and root tree");
  convert_cmd->add_option("input", convert.input, "Graph file, - for stdin")->capture_default_str();
  convert_cmd->add_option("--from", convert.from, "auto | edge-list | graph6")->capture_default_str();
  convert_cmd->add_option("--to", convert.to, "edge-list | graph6 | dot | linegraph | roottree")
      ->capture_default_str();
  convert_cmd->add_option("--format", convert.format, "Graph format for linegraph/roottree output")
      ->capture_default_str();
  convert_cmd->add_option("--output,-o", convert.output, "Output path, - for stdout")->capture_default_str();
  convert_cmd->add_option("--map", convert.map, "Mapping sidecar path (default <output>.map.json)");
  convert_cmd->add_option("--roles", convert.roles, "Role sidecar from gen, for role-colored DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit 0; every usage error maps to 2
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*gen_cmd) {
    gen.params.connected = !gen_disconnected;
    return emit(cmd_gen(gen));
  }
  if (*analyze_cmd) return emit(cmd_analyze(analyze));
  if (*solve_cmd) return emit(cmd_solve(solve));
  if (*verify_cmd) {
    verify.params.connected = !verify_disconnected;
    return emit(cmd_verify_paper(verify));
  }
  if (*tree_cmd) return emit(cmd_tree(tree));
  if (*convert_cmd) return emit(cmd_convert(convert));
  return 2;
}
