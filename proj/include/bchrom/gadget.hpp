#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bchrom/graph.hpp"

namespace bchrom {

struct GadgetParams {
  std::size_t r = 1;  // number of gadget copies
  std::size_t k = 2;
  bool connected = true;
};

/// Throws std::invalid_argument naming the violated constraint.
void validate(const GadgetParams& p);

struct SizeReport {
  std::size_t clique_C = 0;
  std::size_t outer_clique = 0;
  std::size_t m = 0;
  std::size_t dense_count = 0;
  std::size_t n_per_gadget = 0;
  std::size_t n_total = 0;
};

/// Closed-form sizes of the construction.
SizeReport expected_sizes(const GadgetParams& p);

enum class RoleKind { Clique, V1, V2, S1, S2, Outer };

std::string_view role_name(RoleKind k);

/// Role of a single vertex. `side` is 1 or 2 for V/S/Outer roles. For S roles
/// `index` is the position in S^side; for Outer, `owner` is the position of the
/// S-vertex the clique hangs off and `index` the position inside that clique.
struct Role {
  RoleKind kind = RoleKind::Clique;
  std::size_t gadget = 0;
  int side = 0;
  std::size_t owner = 0;
  std::size_t index = 0;
};

/// Where each piece of gadget i lives.
struct GadgetLayout {
  std::vector<VertexId> clique;                      // C(G_i)
  VertexId v1 = 0, v2 = 0;                           // v^1(G_i), v^2(G_i)
  std::vector<VertexId> s1, s2;                      // S^1(G_i), S^2(G_i)
  std::vector<std::vector<VertexId>> outer1, outer2;  // outer clique of s1[t] / s2[t]
  VertexId u1 = 0, u2 = 0;                           // designated u^j_i in S^j
  VertexId w1 = 0, w2 = 0;                           // designated w^j_i in the outer clique of u^j_i

  std::vector<VertexId> dense() const;  // S^1 ∪ S^2 ∪ {v^1, v^2}, sorted
};

struct RoleMap {
  GadgetParams params;
  std::vector<Role> roles;  // indexed by vertex id
  std::vector<GadgetLayout> gadgets;
  std::vector<EdgeId> connecting_edges;  // w^2_i -- w^1_{i+1}

  std::vector<VertexId> designated_dense() const;  // union of gadget dense sets, sorted
};

struct Construction {
  Graph graph;
  RoleMap roles;
};

/// One r,k-gadget with ids starting at `first_id` (no connecting edges).
/// Layout inside a gadget: C, v^1, v^2, S^1, S^2, then outer cliques in S order.
Construction build_gadget(const GadgetParams& p, std::size_t i, VertexId first_id = 0);

/// r gadgets laid out consecutively, plus the connecting path through the
/// designated w-vertices when p.connected is set.
Construction build_construction(const GadgetParams& p);

struct DegreeCheck {
  std::string role;           // "C", "V", "S", "other"
  std::string relation;       // "==" or "<="
  std::size_t expected = 0;
  std::size_t observed_min = 0;
  std::size_t observed_max = 0;
  std::size_t count = 0;
  bool pass = true;
  std::optional<VertexId> offending;  // first vertex violating the bound
};

struct DegreeAuditReport {
  std::vector<DegreeCheck> checks;
  bool pass = true;
};

/// Check every vertex's degree against its role. Throws GraphError if the
/// role map does not describe g (vertex counts differ).
DegreeAuditReport audit_degrees(const Graph& g, const RoleMap& roles, const GadgetParams& p);

struct CertificateCheck {
  std::string name;
  std::string statement;
  bool pass = false;
};

/// Machine-checked version of the counting argument for this family. Checks
/// run in order and stop at the first failure; `bound` is set only if all pass.
struct BoundCertificate {
  std::vector<CertificateCheck> checks;
  std::optional<std::size_t> bound;  // b(G) <= *bound = m - r

  bool pass() const { return bound.has_value(); }
  std::optional<std::string> first_failure() const;
};

BoundCertificate upper_bound_certificate(const Graph& g, const RoleMap& roles, const GadgetParams& p);

/// DOT with one cluster per gadget and fill colors by role.
std::string construction_to_dot(const Graph& g, const RoleMap& roles);

}  // namespace bchrom
