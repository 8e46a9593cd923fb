#include "bchrom/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bchrom/metrics.hpp"
#include "bchrom/structure.hpp"
#include "bchrom/tree_predicates.hpp"

namespace bchrom::cli {

using nlohmann::json;

namespace {

constexpr int kVerdictFailed = 1;
constexpr int kUsageError = 2;

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found:
      return "found";
    case SolveStatus::Exhausted:
      return "exhausted";
    case SolveStatus::BudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

json edge_json(const EdgeId& e) { return json::array({e.u, e.v}); }

json edges_json(const std::vector<EdgeId>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back(edge_json(e));
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& text, CommandOutput& res) {
  if (path == "-") {
    res.out += text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v, v + std::char_traits<char>::length(v), out);
  return ec == std::errc() && *p == '\0' ? out : fallback;
}

template <typename F>
CommandOutput guarded(F&& body) {
  CommandOutput res;
  try {
    body(res);
  } catch (const PreconditionError& e) {
    res.exit_code = kUsageError;
    res.err += "error: precondition '" + e.recognizer() + "' failed: " + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = kUsageError;
    res.err += std::string("error: ") + e.what() + "\n";
  }
  return res;
}

json coloring_json(const Coloring& c) { return json(c.colors); }

json b_result_json(const BChromaticResult& r) {
  json j;
  j["status"] = status_name(r.status);
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["nodes"] = r.nodes;
  j["value"] = r.status == SolveStatus::Found ? json(r.b) : json(nullptr);
  if (r.witness) j["witness"] = coloring_json(*r.witness);
  return j;
}

json chi_result_json(const ChromaticResult& r) {
  json j;
  j["status"] = status_name(r.status);
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["nodes"] = r.nodes;
  j["value"] = r.status == SolveStatus::Found ? json(r.chi) : json(nullptr);
  return j;
}

Tree require_tree(const Graph& g) {
  if (!is_tree(g)) throw PreconditionError("tree", "input is not a tree");
  return Tree::from_graph(g);
}

}  // namespace

SolveConfig default_solve_config() {
  SolveConfig cfg;
  cfg.node_budget = env_u64("BCHROM_NODE_BUDGET", 100'000'000);
  cfg.time_budget_seconds = static_cast<double>(env_u64("BCHROM_TIME_BUDGET", 300));
  return cfg;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

Graph load_graph(const std::string& text, const std::string& format) {
  GraphFormat f;
  if (format == "auto") {
    f = detect_format(text);
  } else {
    auto named = format_from_name(format);
    if (!named || *named == GraphFormat::Dot) throw std::invalid_argument("unknown input format '" + format + "'");
    f = *named;
  }
  return parse_graph(text, f);
}

std::vector<VertexId> parse_vertex_list(const std::string& spec) {
  std::vector<VertexId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    VertexId v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size()) {
      throw std::invalid_argument("bad vertex id '" + item + "' in W-spec");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> parse_edge_spec(const std::string& spec) {
  std::vector<EdgeId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge '" + item + "' is not of the form u-v");
    auto ends = parse_vertex_list(item.substr(0, dash) + "," + item.substr(dash + 1));
    if (ends.size() != 2 || ends[0] == ends[1]) throw std::invalid_argument("bad edge '" + item + "' in W-spec");
    out.emplace_back(ends[0], ends[1]);
  }
  return out;
}

json roles_to_json(const RoleMap& roles, const SizeReport& sizes) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["params"] = {{"r", roles.params.r}, {"k", roles.params.k}, {"connected", roles.params.connected}};
  j["sizes"] = {{"clique_C", sizes.clique_C},       {"outer_clique", sizes.outer_clique},
                {"m", sizes.m},                     {"dense_count", sizes.dense_count},
                {"n_per_gadget", sizes.n_per_gadget}, {"n_total", sizes.n_total}};
  json gadgets = json::array();
  for (std::size_t i = 0; i < roles.gadgets.size(); ++i) {
    const auto& gl = roles.gadgets[i];
    gadgets.push_back({{"index", i},     {"C", gl.clique},     {"v1", gl.v1},         {"v2", gl.v2},
                       {"S1", gl.s1},    {"S2", gl.s2},        {"outer1", gl.outer1}, {"outer2", gl.outer2},
                       {"u1", gl.u1},    {"u2", gl.u2},        {"w1", gl.w1},         {"w2", gl.w2}});
  }
  j["gadgets"] = gadgets;
  j["connecting_edges"] = edges_json(roles.connecting_edges);
  json rs = json::array();
  for (const auto& r : roles.roles) {
    rs.push_back({{"role", role_name(r.kind)}, {"gadget", r.gadget}, {"side", r.side},
                  {"owner", r.owner},          {"index", r.index}});
  }
  j["roles"] = rs;
  return j;
}

RoleMap roles_from_json(const json& j) {
  RoleMap rm;
  rm.params.r = j.at("params").at("r").get<std::size_t>();
  rm.params.k = j.at("params").at("k").get<std::size_t>();
  rm.params.connected = j.at("params").at("connected").get<bool>();
  for (const auto& g : j.at("gadgets")) {
    GadgetLayout gl;
    gl.clique = g.at("C").get<std::vector<VertexId>>();
    gl.v1 = g.at("v1").get<VertexId>();
    gl.v2 = g.at("v2").get<VertexId>();
    gl.s1 = g.at("S1").get<std::vector<VertexId>>();
    gl.s2 = g.at("S2").get<std::vector<VertexId>>();
    gl.outer1 = g.at("outer1").get<std::vector<std::vector<VertexId>>>();
    gl.outer2 = g.at("outer2").get<std::vector<std::vector<VertexId>>>();
    gl.u1 = g.at("u1").get<VertexId>();
    gl.u2 = g.at("u2").get<VertexId>();
    gl.w1 = g.at("w1").get<VertexId>();
    gl.w2 = g.at("w2").get<VertexId>();
    rm.gadgets.push_back(std::move(gl));
  }
  for (const auto& e : j.at("connecting_edges")) {
    rm.connecting_edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
  }
  for (const auto& r : j.at("roles")) {
    Role role;
    const auto name = r.at("role").get<std::string>();
    bool known = false;
    for (RoleKind k : {RoleKind::Clique, RoleKind::V1, RoleKind::V2, RoleKind::S1, RoleKind::S2, RoleKind::Outer}) {
      if (role_name(k) == name) {
        role.kind = k;
        known = true;
      }
    }
    if (!known) throw std::invalid_argument("unknown role '" + name + "' in sidecar");
    role.gadget = r.at("gadget").get<std::size_t>();
    role.side = r.at("side").get<int>();
    role.owner = r.at("owner").get<std::size_t>();
    role.index = r.at("index").get<std::size_t>();
    rm.roles.push_back(role);
  }
  return rm;
}

json analysis_report(const Graph& g, bool solve, const SolveConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = g.order();
  j["edges"] = g.size();
  j["max_degree"] = g.max_degree();
  const auto d = dense_vertices(g);
  j["m"] = d.m;
  j["dense"] = d.members;
  j["dense_count"] = d.members.size();
  j["tight"] = is_tight(g);
  const bool nonempty = g.order() > 0;
  j["connected"] = nonempty && is_connected(g);
  j["tree"] = is_tree(g);
  j["claw_free"] = is_claw_free(g);
  j["block_graph"] = is_block_graph(g);
  if (solve) {
    j["b"] = b_result_json(b_chromatic_number(g, cfg));
    j["chi"] = chi_result_json(chromatic_number(g, cfg));
  }
  return j;
}

json solve_report(const Graph& g, const SolveConfig& cfg) {
  auto b = b_chromatic_number(g, cfg);
  auto chi = chromatic_number(g, cfg);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["m"] = m_degree(g);
  j["b"] = b.status == SolveStatus::Found ? json(b.b) : json(nullptr);
  j["b_lower"] = b.lower;
  j["b_upper"] = b.upper;
  j["chi"] = chi.status == SolveStatus::Found ? json(chi.chi) : json(nullptr);
  j["status"] = b.status == SolveStatus::Found && chi.status == SolveStatus::Found
                    ? "found"
                    : "budget-exceeded";
  j["nodes"] = b.nodes + chi.nodes;
  if (b.status == SolveStatus::Found && b.witness) j["witness"] = coloring_json(*b.witness);
  return j;
}

json verify_paper_report(const GadgetParams& p, bool solve, const SolveConfig& cfg) {
  json j;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& name) {
    if (!ok) failures.push_back(name);
    return ok;
  };

  j["schema_version"] = kSchemaVersion;
  j["params"] = {{"r", p.r}, {"k", p.k}, {"connected", p.connected}};
  const auto sizes = expected_sizes(p);
  const auto con = build_construction(p);
  const Graph& g = con.graph;

  const auto d = dense_vertices(g);
  const bool sizes_ok = g.order() == sizes.n_total && d.m == sizes.m && d.members.size() == sizes.dense_count &&
                        d.members == con.roles.designated_dense();
  j["sizes"] = {{"expected",
                 {{"clique_C", sizes.clique_C},
                  {"outer_clique", sizes.outer_clique},
                  {"m", sizes.m},
                  {"dense_count", sizes.dense_count},
                  {"n_per_gadget", sizes.n_per_gadget},
                  {"n_total", sizes.n_total}}},
                {"observed", {{"n", g.order()}, {"edges", g.size()}, {"m", d.m}, {"dense_count", d.members.size()}}},
                {"dense_matches_roles", d.members == con.roles.designated_dense()},
                {"pass", expect(sizes_ok, "sizes")}};

  const bool connected = is_connected(g);
  const std::size_t components = component_count(g);
  const bool claw_free = is_claw_free(g);
  const bool block = is_block_graph(g);
  const bool tight = is_tight(g);
  j["recognizers"] = {{"connected", connected}, {"components", components}, {"claw_free", claw_free},
                      {"block_graph", block},   {"tight", tight}};
  expect(p.connected ? connected : components == p.r, "connected");
  expect(claw_free, "claw_free");
  expect(block, "block_graph");
  expect(tight, "tight");

  const auto audit = audit_degrees(g, con.roles, p);
  json checks = json::array();
  for (const auto& c : audit.checks) {
    json cj = {{"role", c.role},
               {"relation", c.relation},
               {"expected", c.expected},
               {"observed_min", c.observed_min},
               {"observed_max", c.observed_max},
               {"count", c.count},
               {"pass", c.pass}};
    cj["offending"] = c.offending ? json(*c.offending) : json(nullptr);
    checks.push_back(cj);
  }
  j["degree_audit"] = {{"pass", expect(audit.pass, "degree_audit")}, {"checks", checks}};

  const auto cert = upper_bound_certificate(g, con.roles, p);
  json cchecks = json::array();
  for (const auto& c : cert.checks) cchecks.push_back({{"name", c.name}, {"statement", c.statement}, {"pass", c.pass}});
  json cj = {{"pass", expect(cert.pass(), "certificate")}, {"checks", cchecks}};
  cj["bound"] = cert.bound ? json(*cert.bound) : json(nullptr);
  cj["conclusion"] = cert.bound ? json("b(G) <= " + std::to_string(*cert.bound) + " = m(G) - " + std::to_string(p.r))
                                : json(nullptr);
  cj["first_failure"] = cert.first_failure() ? json(*cert.first_failure()) : json(nullptr);
  j["certificate"] = cj;

  if (p.connected) {
    bool rt = false;
    std::size_t tree_order = 0;
    try {
      auto root = root_tree(g);
      tree_order = root.tree.order();
      rt = reproduces_line_graph(g, root.tree, root.map);
    } catch (const GraphError&) {
      rt = false;
    }
    j["round_trip"] = {{"applicable", true}, {"tree_order", tree_order}, {"pass", expect(rt, "round_trip")}};
  } else {
    j["round_trip"] = {{"applicable", false}, {"pass", true}};
  }

  if (solve) {
    auto b = b_chromatic_number(g, cfg);
    json sj = b_result_json(b);
    sj.erase("witness");
    const bool consistent = !cert.bound || b.lower <= *cert.bound;
    sj["consistent_with_certificate"] = expect(consistent, "solver_consistent");
    j["solve"] = sj;
  }

  j["failures"] = failures;
  j["verdict"] = failures.empty() ? "pass" : "fail";
  return j;
}

CommandOutput cmd_gen(const GenOptions& o) {
  return guarded([&](CommandOutput& res) {
    const auto sizes = expected_sizes(o.params);
    const auto con = build_construction(o.params);
    auto fmt = format_from_name(o.format);
    if (!fmt) throw std::invalid_argument("unknown output format '" + o.format + "'");
    const std::string text =
        *fmt == GraphFormat::Dot ? construction_to_dot(con.graph, con.roles) : serialize_graph(con.graph, *fmt);
    write_file(o.output, text, res);
    std::optional<std::string> sidecar = o.sidecar;
    if (!sidecar && o.output != "-") sidecar = o.output + ".roles.json";
    if (sidecar) {
      if (*sidecar == "-" && o.output == "-") throw std::invalid_argument("graph and sidecar cannot both go to stdout");
      write_file(*sidecar, dump(roles_to_json(con.roles, sizes)), res);
    }
    res.err += "generated " + std::to_string(con.graph.order()) + " vertices, " +
               std::to_string(con.graph.size()) + " edges\n";
  });
}

CommandOutput cmd_analyze(const AnalyzeOptions& o) {
  return guarded([&](CommandOutput& res) {
    const Graph g = load_graph(read_input(o.input), o.format);
    res.out = dump(analysis_report(g, o.solve, o.cfg));
  });
}

CommandOutput cmd_solve(const AnalyzeOptions& o) {
  return guarded([&](CommandOutput& res) {
    const Graph g = load_graph(read_input(o.input), o.format);
    const json j = solve_report(g, o.cfg);
    res.out = dump(j);
    if (j["status"] != "found") res.exit_code = kVerdictFailed;
  });
}

CommandOutput cmd_verify_paper(const VerifyOptions& o) {
  return guarded([&](CommandOutput& res) {
    const json j = verify_paper_report(o.params, o.solve, o.cfg);
    res.out = dump(j);
    if (j["verdict"] != "pass") {
      res.exit_code = kVerdictFailed;
      for (const auto& f : j["failures"]) res.err += "failed: " + f.get<std::string>() + "\n";
    }
  });
}

CommandOutput cmd_tree(const TreeOptions& o) {
  return guarded([&](CommandOutput& res) {
    const Graph g = load_graph(read_input(o.input), o.format);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["action"] = o.action;

    if (o.action == "witness") {
      std::vector<VertexId> w = o.w ? parse_vertex_list(*o.w) : dense_vertices(g).members;
      auto wit = jp_failure_witness(g, w);
      j["w"] = WSet::of_vertices(w).vertices;
      if (wit) {
        j["witness"] = {{"side_vertex", wit->side_vertex},
                        {"side_edge", edge_json(wit->side_edge)},
                        {"w_neighbors", wit->w_neighbors},
                        {"w_neighbor_edges", edges_json(wit->w_neighbor_edges)}};
      } else {
        j["witness"] = nullptr;
      }
      res.out = dump(j);
      return;
    }

    const Tree t = require_tree(g);
    if (o.action == "pivoted") {
      auto d = dense_vertices(g);
      auto pivot = is_pivoted(t);
      j["m"] = d.m;
      j["dense"] = d.members;
      j["pivoted"] = pivot.has_value();
      j["pivot"] = pivot ? json(*pivot) : json(nullptr);
    } else if (o.action == "goodset") {
      if (o.w) {
        auto w = WSet::of_vertices(parse_vertex_list(*o.w));
        j["w"] = w.vertices;
        j["is_good_set"] = is_good_set(t, w);
      } else {
        auto s = search_good_set(t, o.node_budget);
        j["status"] = s.status == GoodSetSearch::Status::Found  ? "found"
                      : s.status == GoodSetSearch::Status::None ? "none"
                                                                : "indeterminate";
        j["good_set"] = s.good_set ? json(s.good_set->vertices) : json(nullptr);
        j["nodes"] = s.nodes;
        if (s.status == GoodSetSearch::Status::Indeterminate) res.exit_code = kVerdictFailed;
      }
    } else if (o.action == "classify") {
      if (!o.w) throw std::invalid_argument("classify needs --w with u-v edge pairs");
      auto w = WSet::of_edges(parse_edge_spec(*o.w));
      auto part = classify_inner_outer_edges(t, w);
      j["w"] = edges_json(w.edges);
      j["universe"] = edges_json(part.universe);
      j["inner"] = edges_json(part.inner);
      j["outer"] = edges_json(part.outer);
      j["side_edges"] = edges_json(side_edges(t, w));
    } else if (o.action == "encircles" || o.action == "dist2") {
      if (!o.v || *o.v >= g.order()) throw std::invalid_argument(o.action + " needs --v with a vertex of the tree");
      j["v"] = *o.v;
      if (o.action == "dist2") {
        j["dist2"] = dist2(t, *o.v);
      } else {
        auto w = WSet::of_vertices(o.w ? parse_vertex_list(*o.w) : dense_vertices(g).members);
        j["w"] = w.vertices;
        j["encircles"] = encircles(t, w, *o.v);
      }
    } else {
      throw std::invalid_argument("unknown tree action '" + o.action + "'");
    }
    res.out = dump(j);
  });
}

CommandOutput cmd_convert(const ConvertOptions& o) {
  return guarded([&](CommandOutput& res) {
    const Graph g = load_graph(read_input(o.input), o.from);

    if (o.to == "linegraph" || o.to == "roottree") {
      auto fmt = format_from_name(o.format);
      if (!fmt) throw std::invalid_argument("unknown output format '" + o.format + "'");
      json mj;
      mj["schema_version"] = kSchemaVersion;
      mj["mode"] = o.to;
      json entries = json::array();
      Graph result;
      if (o.to == "linegraph") {
        auto lg = line_graph(g);
        for (VertexId x = 0; x < lg.map.backward.size(); ++x) {
          entries.push_back({{"line_vertex", x}, {"edge", edge_json(lg.map.backward[x])}});
        }
        result = std::move(lg.graph);
      } else {
        auto root = root_tree(g);
        for (VertexId x = 0; x < root.map.backward.size(); ++x) {
          entries.push_back({{"line_vertex", x}, {"edge", edge_json(root.map.backward[x])}});
        }
        result = root.tree.graph();
      }
      mj["map"] = entries;
      write_file(o.output, serialize_graph(result, *fmt), res);
      std::optional<std::string> map_path = o.map;
      if (!map_path && o.output != "-") map_path = o.output + ".map.json";
      if (map_path) {
        write_file(*map_path, dump(mj), res);
      } else {
        res.err += "note: mapping not written; pass --map or --output\n";
      }
      return;
    }

    auto fmt = format_from_name(o.to);
    if (!fmt) throw std::invalid_argument("unknown target '" + o.to + "'");
    std::string text;
    if (*fmt == GraphFormat::Dot && o.roles) {
      auto rm = roles_from_json(json::parse(read_input(*o.roles)));
      if (rm.roles.size() != g.order()) throw std::invalid_argument("role sidecar does not match the graph");
      text = construction_to_dot(g, rm);
    } else {
      text = serialize_graph(g, *fmt);
    }
    write_file(o.output, text, res);
  });
}

}  // namespace bchrom::cli
