#include "bchrom/gadget.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bchrom/metrics.hpp"

namespace bchrom {

void validate(const GadgetParams& p) {
  if (p.r < 1) throw std::invalid_argument("r must be a positive integer");
  if (p.connected && p.k <= p.r) {
    throw std::invalid_argument("k > r required for the connected construction (got r=" +
                                std::to_string(p.r) + ", k=" + std::to_string(p.k) + ")");
  }
  if (!p.connected && p.k < p.r) {
    throw std::invalid_argument("k >= r required for the disconnected construction (got r=" +
                                std::to_string(p.r) + ", k=" + std::to_string(p.k) + ")");
  }
}

SizeReport expected_sizes(const GadgetParams& p) {
  validate(p);
  const std::size_t r = p.r, k = p.k;
  SizeReport s;
  s.clique_C = 2 * k * r + 2 * r - k - 2;
  s.outer_clique = 2 * k * r + 2 * r - k - 1;
  s.m = 2 * k * r + 2 * r;
  s.dense_count = r * (2 * k + 2);
  s.n_per_gadget = s.clique_C + 2 + 2 * k + 2 * k * s.outer_clique;
  s.n_total = r * s.n_per_gadget;
  return s;
}

std::string_view role_name(RoleKind k) {
  switch (k) {
    case RoleKind::Clique:
      return "C";
    case RoleKind::V1:
      return "v1";
    case RoleKind::V2:
      return "v2";
    case RoleKind::S1:
      return "S1";
    case RoleKind::S2:
      return "S2";
    case RoleKind::Outer:
      return "outer";
  }
  return "?";
}

std::vector<VertexId> GadgetLayout::dense() const {
  std::vector<VertexId> out = s1;
  out.insert(out.end(), s2.begin(), s2.end());
  out.push_back(v1);
  out.push_back(v2);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> RoleMap::designated_dense() const {
  std::vector<VertexId> out;
  for (const auto& gl : gadgets) {
    auto d = gl.dense();
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void add_clique(std::vector<EdgeId>& es, const std::vector<VertexId>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) es.emplace_back(vs[a], vs[b]);
}

std::vector<VertexId> take(VertexId& next, std::size_t count) {
  std::vector<VertexId> out(count);
  for (auto& v : out) v = next++;
  return out;
}

// Appends gadget i to the role map and edge list.
void emit_gadget(const GadgetParams& p, std::size_t i, VertexId& next, RoleMap& rm,
                 std::vector<EdgeId>& es) {
  const auto sz = expected_sizes(p);
  GadgetLayout gl;
  gl.clique = take(next, sz.clique_C);
  gl.v1 = next++;
  gl.v2 = next++;
  gl.s1 = take(next, p.k);
  gl.s2 = take(next, p.k);
  for (std::size_t t = 0; t < p.k; ++t) gl.outer1.push_back(take(next, sz.outer_clique));
  for (std::size_t t = 0; t < p.k; ++t) gl.outer2.push_back(take(next, sz.outer_clique));

  // C ∪ {v1, v2} is one clique; v^j joins S^j into another.
  std::vector<VertexId> core = gl.clique;
  core.push_back(gl.v1);
  core.push_back(gl.v2);
  add_clique(es, core);
  std::vector<VertexId> b1 = gl.s1, b2 = gl.s2;
  b1.push_back(gl.v1);
  b2.push_back(gl.v2);
  add_clique(es, b1);
  add_clique(es, b2);
  for (std::size_t t = 0; t < p.k; ++t) {
    std::vector<VertexId> o1 = gl.outer1[t], o2 = gl.outer2[t];
    o1.push_back(gl.s1[t]);
    o2.push_back(gl.s2[t]);
    add_clique(es, o1);
    add_clique(es, o2);
  }

  // Lowest eligible id for each designated vertex.
  gl.u1 = gl.s1.front();
  gl.u2 = gl.s2.front();
  gl.w1 = gl.outer1.front().front();
  gl.w2 = gl.outer2.front().front();

  rm.roles.resize(next);
  for (std::size_t t = 0; t < gl.clique.size(); ++t) rm.roles[gl.clique[t]] = {RoleKind::Clique, i, 0, 0, t};
  rm.roles[gl.v1] = {RoleKind::V1, i, 1, 0, 0};
  rm.roles[gl.v2] = {RoleKind::V2, i, 2, 0, 0};
  for (std::size_t t = 0; t < p.k; ++t) {
    rm.roles[gl.s1[t]] = {RoleKind::S1, i, 1, 0, t};
    rm.roles[gl.s2[t]] = {RoleKind::S2, i, 2, 0, t};
    for (std::size_t q = 0; q < sz.outer_clique; ++q) {
      rm.roles[gl.outer1[t][q]] = {RoleKind::Outer, i, 1, t, q};
      rm.roles[gl.outer2[t][q]] = {RoleKind::Outer, i, 2, t, q};
    }
  }
  rm.gadgets.push_back(std::move(gl));
}

}  // namespace

Construction build_gadget(const GadgetParams& p, std::size_t i, VertexId first_id) {
  validate(p);
  if (i >= p.r) throw std::invalid_argument("gadget index out of range");
  RoleMap rm;
  rm.params = p;
  std::vector<EdgeId> es;
  VertexId next = first_id;
  rm.roles.resize(first_id);
  emit_gadget(p, i, next, rm, es);
  return {Graph::from_edges(next, es), std::move(rm)};
}

Construction build_construction(const GadgetParams& p) {
  validate(p);
  RoleMap rm;
  rm.params = p;
  std::vector<EdgeId> es;
  VertexId next = 0;
  for (std::size_t i = 0; i < p.r; ++i) emit_gadget(p, i, next, rm, es);
  if (p.connected) {
    for (std::size_t i = 0; i + 1 < p.r; ++i) {
      rm.connecting_edges.emplace_back(rm.gadgets[i].w2, rm.gadgets[i + 1].w1);
    }
    es.insert(es.end(), rm.connecting_edges.begin(), rm.connecting_edges.end());
  }
  return {Graph::from_edges(next, es), std::move(rm)};
}

DegreeAuditReport audit_degrees(const Graph& g, const RoleMap& roles, const GadgetParams& p) {
  if (roles.roles.size() != g.order()) {
    throw GraphError("role map covers " + std::to_string(roles.roles.size()) +
                     " vertices but the graph has " + std::to_string(g.order()));
  }
  const std::size_t r = p.r, k = p.k;
  DegreeAuditReport rep;
  rep.checks = {
      {"C", "==", 2 * k * r + 2 * r - k - 1, SIZE_MAX, 0, 0, true, std::nullopt},
      {"V", "==", 2 * k * r + 2 * r - 1, SIZE_MAX, 0, 0, true, std::nullopt},
      {"S", "==", 2 * k * r + 2 * r - 1, SIZE_MAX, 0, 0, true, std::nullopt},
      {"other", "<=", 2 * k * r + 2 * r - k, SIZE_MAX, 0, 0, true, std::nullopt},
  };
  for (VertexId u = 0; u < g.order(); ++u) {
    std::size_t slot = 3;
    switch (roles.roles[u].kind) {
      case RoleKind::Clique:
        slot = 0;
        break;
      case RoleKind::V1:
      case RoleKind::V2:
        slot = 1;
        break;
      case RoleKind::S1:
      case RoleKind::S2:
        slot = 2;
        break;
      case RoleKind::Outer:
        slot = 3;
        break;
    }
    auto& c = rep.checks[slot];
    const std::size_t d = g.degree(u);
    c.observed_min = std::min(c.observed_min, d);
    c.observed_max = std::max(c.observed_max, d);
    ++c.count;
    const bool ok = c.relation == "==" ? d == c.expected : d <= c.expected;
    if (!ok && c.pass) {
      c.pass = false;
      c.offending = u;
    }
  }
  for (auto& c : rep.checks) {
    if (c.count == 0) c.observed_min = 0;
    rep.pass = rep.pass && c.pass;
  }
  return rep;
}

std::optional<std::string> BoundCertificate::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return c.name;
  }
  return std::nullopt;
}

BoundCertificate upper_bound_certificate(const Graph& g, const RoleMap& roles, const GadgetParams& p) {
  if (roles.roles.size() != g.order() || roles.gadgets.size() != p.r) {
    throw GraphError("certificate needs the role map produced with the graph");
  }
  BoundCertificate cert;
  auto record = [&](std::string name, std::string statement, bool ok) {
    cert.checks.push_back({std::move(name), std::move(statement), ok});
    return ok;
  };
  const std::size_t r = p.r, k = p.k;
  const std::string R = std::to_string(r);

  auto audit = audit_degrees(g, roles, p);
  if (!record("degree-audit", "every vertex has the degree its role prescribes", audit.pass)) return cert;

  // (1) the m-degree and the dense set
  const std::size_t m = m_degree(g);
  const std::size_t m_formula = 2 * k * r + 2 * r;
  if (!record("m-degree", "m(G) = " + std::to_string(m) + " = 2kr+2r = " + std::to_string(m_formula),
              m == m_formula)) {
    return cert;
  }
  const auto dense = dense_vertices(g).members;
  const auto designated = roles.designated_dense();
  if (!record("dense-set",
              "D(G) = union of S^1, S^2, v^1, v^2 over all gadgets, |D| = " + std::to_string(dense.size()) +
                  " = r(2k+2) = " + std::to_string(r * (2 * k + 2)),
              dense == designated && dense.size() == r * (2 * k + 2))) {
    return cert;
  }

  // (2) a coloring with m-r+1 colors needs b-vertices of degree >= m-r, all inside D
  std::size_t outside_max = 0;
  for (VertexId u = 0; u < g.order(); ++u) {
    if (!std::binary_search(dense.begin(), dense.end(), u)) outside_max = std::max(outside_max, g.degree(u));
  }
  if (!record("basis-in-dense",
              "max degree outside D is " + std::to_string(outside_max) + " <= m-r-1 = " +
                  std::to_string(m - r - 1) + ", so any basis V' with >= m-r+1 colors lies in D",
              outside_max + r + 1 <= m)) {
    return cert;
  }

  // (3) pigeonhole over the gadgets
  bool partition = true;
  std::size_t total = 0;
  for (const auto& gl : roles.gadgets) {
    auto d = gl.dense();
    partition = partition && d.size() == 2 * k + 2;
    total += d.size();
  }
  partition = partition && total == dense.size();
  const std::size_t all_but_one = r * (2 * k + 2) - r;
  if (!record("pigeonhole",
              "D splits into " + R + " gadgets of 2k+2 = " + std::to_string(2 * k + 2) +
                  " dense vertices; missing one per gadget leaves " + std::to_string(all_but_one) +
                  " < m-r+1 = " + std::to_string(m - r + 1) + ", so some gadget has D ∩ V(G_i) ⊆ V'",
              partition && all_but_one < m - r + 1)) {
    return cert;
  }

  // (4) N(v^j(G_i)) \ V' = C(G_i)
  bool attach = true;
  for (const auto& gl : roles.gadgets) {
    const auto local = gl.dense();
    for (VertexId vj : {gl.v1, gl.v2}) {
      std::vector<VertexId> outside;
      for (VertexId x : g.neighbors(vj)) {
        if (std::binary_search(local.begin(), local.end(), x)) continue;
        outside.push_back(x);
      }
      attach = attach && outside == gl.clique;
    }
  }
  if (!record("attachment-neighborhood",
              "for every gadget, N(v^j) minus the gadget's dense set is exactly C(G_i), j = 1,2; "
              "so every color of V' \\ {v^1, v^2} appears in C(G_i)",
              attach)) {
    return cert;
  }

  // (5) the central clique is too small to hold those colors
  bool sizes = true;
  for (const auto& gl : roles.gadgets) {
    bool clique = true;
    for (std::size_t a = 0; a < gl.clique.size() && clique; ++a)
      for (std::size_t b = a + 1; b < gl.clique.size() && clique; ++b)
        clique = g.has_edge(gl.clique[a], gl.clique[b]);
    sizes = sizes && clique && gl.clique.size() + k + 2 == m;
  }
  std::string stmt = "|C(G_i)| = m-k-2 = " + std::to_string(m - k - 2);
  if (k > r) stmt += " <= m-r-3 = " + std::to_string(m - r - 3);
  stmt += " < m-r-1 = " + std::to_string(m - r - 1) + " <= |V' \\ {v^1, v^2}|";
  if (!record("clique-count", stmt, sizes && m - k - 2 < m - r - 1)) return cert;

  cert.bound = m - r;
  return cert;
}

std::string construction_to_dot(const Graph& g, const RoleMap& roles) {
  auto fill = [](RoleKind k) -> std::string_view {
    switch (k) {
      case RoleKind::Clique:
        return "lightblue";
      case RoleKind::V1:
      case RoleKind::V2:
        return "tomato";
      case RoleKind::S1:
      case RoleKind::S2:
        return "orange";
      case RoleKind::Outer:
        return "gray90";
    }
    return "white";
  };
  std::ostringstream out;
  out << "graph G {\n  node [style=filled, shape=circle];\n";
  for (std::size_t i = 0; i < roles.gadgets.size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n    label=\"G" << (i + 1) << "\";\n";
    for (VertexId u = 0; u < g.order(); ++u) {
      if (u >= roles.roles.size() || roles.roles[u].gadget != i) continue;
      out << "    " << u << " [fillcolor=" << fill(roles.roles[u].kind) << ", tooltip=\""
          << role_name(roles.roles[u].kind) << "\"];\n";
    }
    out << "  }\n";
  }
  for (const auto& e : g.edges()) {
    bool link = std::find(roles.connecting_edges.begin(), roles.connecting_edges.end(), e) !=
                roles.connecting_edges.end();
    out << "  " << e.u << " -- " << e.v << (link ? " [penwidth=3]" : "") << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bchrom
