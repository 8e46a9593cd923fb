#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "bchrom/gadget.hpp"
#include "bchrom/metrics.hpp"
#include "bchrom/structure.hpp"

using namespace bchrom;

namespace {

// Sizes summed part by part, without the closed forms.
std::size_t count_gadget_vertices(std::size_t r, std::size_t k) {
  const std::size_t c = 2 * k * r + 2 * r - k - 2;
  const std::size_t outer = c + 1;
  std::size_t n = c;  // C
  n += 2;             // v1, v2
  n += 2 * k;         // S1, S2
  for (std::size_t s = 0; s < 2 * k; ++s) n += outer;
  return n;
}

bool is_clique(const Graph& g, const std::vector<VertexId>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.has_edge(vs[a], vs[b])) return false;
  return true;
}

bool joined(const Graph& g, VertexId x, const std::vector<VertexId>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](VertexId y) { return g.has_edge(x, y); });
}

}  // namespace

TEST_SUITE("gadget") {
  TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate({2, 3, true}));
    CHECK_THROWS_AS(validate({2, 2, true}), std::invalid_argument);
    CHECK_NOTHROW(validate({2, 2, false}));
    CHECK_THROWS_AS(validate({3, 2, false}), std::invalid_argument);
    CHECK_THROWS_AS(validate({0, 2, true}), std::invalid_argument);
    try {
      validate({2, 2, true});
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("k > r") != std::string::npos);
    }
    CHECK_THROWS_AS(expected_sizes({2, 2, true}), std::invalid_argument);
    CHECK_THROWS_AS(build_construction({2, 1, true}), std::invalid_argument);
    CHECK_THROWS_AS(build_gadget({2, 3, true}, 2), std::invalid_argument);
  }

  TEST_CASE("expected sizes") {
    const auto s = expected_sizes({2, 3, true});
    CHECK(s.clique_C == 11);
    CHECK(s.outer_clique == 12);
    CHECK(s.m == 16);
    CHECK(s.dense_count == 16);
    CHECK(s.n_per_gadget == 91);
    CHECK(s.n_total == 182);
    const auto t = expected_sizes({1, 2, true});
    CHECK(t.clique_C == 2);
    CHECK(t.outer_clique == 3);
    CHECK(t.m == 6);
    CHECK(t.dense_count == 6);
    CHECK(t.n_total == 20);
  }

  TEST_CASE("property: closed-form sizes match the part-by-part count and the built graph") {
    for (std::size_t r = 1; r <= 4; ++r) {
      for (std::size_t k = r; k <= r + 3; ++k) {
        const bool connected = k > r;
        const GadgetParams p{r, k, connected};
        const auto s = expected_sizes(p);
        CHECK(s.n_per_gadget == count_gadget_vertices(r, k));
        CHECK(s.n_total == r * count_gadget_vertices(r, k));
        const auto c = build_construction(p);
        CHECK(c.graph.order() == s.n_total);
        CHECK(m_degree(c.graph) == s.m);
        CHECK(dense_vertices(c.graph).members.size() == s.dense_count);
      }
    }
  }

  TEST_CASE("single gadget structure") {
    const GadgetParams p{2, 3, true};
    const auto c = build_gadget(p, 0);
    const auto& g = c.graph;
    const auto& gl = c.roles.gadgets.at(0);
    CHECK(g.order() == 91);
    CHECK(g.degree(gl.v1) == 15);
    CHECK(g.degree(gl.v2) == 15);
    CHECK(g.has_edge(gl.v1, gl.v2));
    CHECK(is_clique(g, gl.clique));
    CHECK(joined(g, gl.v1, gl.clique));
    CHECK(joined(g, gl.v2, gl.clique));
    CHECK(is_clique(g, gl.s1));
    CHECK(is_clique(g, gl.s2));
    CHECK(joined(g, gl.v1, gl.s1));
    CHECK(joined(g, gl.v2, gl.s2));
    CHECK_FALSE(g.has_edge(gl.v1, gl.s2[0]));
    for (std::size_t t = 0; t < 3; ++t) {
      CHECK(gl.outer1[t].size() == 12);
      CHECK(is_clique(g, gl.outer1[t]));
      CHECK(joined(g, gl.s1[t], gl.outer1[t]));
      CHECK(joined(g, gl.s2[t], gl.outer2[t]));
    }
    // designated vertices: lowest-id eligible choices
    CHECK(gl.u1 == gl.s1.front());
    CHECK(gl.u2 == gl.s2.front());
    CHECK(gl.w1 == gl.outer1[0].front());
    CHECK(gl.w2 == gl.outer2[0].front());
    // id layout: C first, then v1, v2, S1, S2, then outer cliques in S-order
    CHECK(gl.clique.front() == 0);
    CHECK(gl.v1 == 11);
    CHECK(gl.v2 == 12);
    CHECK(gl.s1.front() == 13);
    CHECK(gl.s2.front() == 16);
    CHECK(gl.outer1[0].front() == 19);
    CHECK(gl.outer2[2].back() == 90);

    const auto small = build_gadget({1, 2, true}, 0);
    CHECK(small.graph.order() == 20);
    std::size_t five = 0;
    for (VertexId v = 0; v < 20; ++v) five += small.graph.degree(v) == 5 ? 1 : 0;
    CHECK(five == 6);

    const auto shifted = build_gadget(p, 1, 91);
    CHECK(shifted.roles.gadgets.at(0).clique.front() == 91);
  }

  TEST_CASE("construction and connecting edges") {
    const auto c = build_construction({2, 3, true});
    CHECK(c.graph.order() == 182);
    CHECK(c.roles.connecting_edges.size() == 1);
    CHECK(c.roles.connecting_edges[0] == EdgeId(c.roles.gadgets[0].w2, c.roles.gadgets[1].w1));
    CHECK(c.graph.has_edge(c.roles.gadgets[0].w2, c.roles.gadgets[1].w1));
    CHECK(is_connected(c.graph));
    CHECK(c.graph.size() == 2 * build_gadget({2, 3, true}, 0).graph.size() + 1);

    const auto d = build_construction({2, 2, false});
    CHECK(d.roles.connecting_edges.empty());
    CHECK(component_count(d.graph) == 2);
    CHECK_THROWS_AS(build_construction({2, 2, true}), std::invalid_argument);
  }

  TEST_CASE("role map is complete") {
    const auto c = build_construction({3, 4, true});
    CHECK(c.roles.roles.size() == c.graph.order());
    std::size_t cl = 0, v = 0, s = 0, o = 0;
    for (const auto& role : c.roles.roles) {
      switch (role.kind) {
        case RoleKind::Clique: ++cl; break;
        case RoleKind::V1: case RoleKind::V2: ++v; break;
        case RoleKind::S1: case RoleKind::S2: ++s; break;
        case RoleKind::Outer: ++o; break;
      }
      CHECK(role.gadget < 3);
    }
    CHECK(cl == 3 * (30 - 4 - 2));
    CHECK(v == 6);
    CHECK(s == 24);
    CHECK(o == 24 * (30 - 4 - 1));
    CHECK(role_name(RoleKind::S2) == "S2");
    const auto& r0 = c.roles.roles[c.roles.gadgets[1].outer2[2][5]];
    CHECK(r0.kind == RoleKind::Outer);
    CHECK(r0.gadget == 1);
    CHECK(r0.side == 2);
    CHECK(r0.owner == 2);
    CHECK(r0.index == 5);
  }

  TEST_CASE("property: recognizers hold on every valid construction") {
    for (std::size_t r = 1; r <= 4; ++r) {
      for (std::size_t k = r; k <= r + 3; ++k) {
        const GadgetParams p{r, k, k > r};
        const auto c = build_construction(p);
        CHECK(is_claw_free(c.graph));
        CHECK(is_block_graph(c.graph));
        CHECK(is_tight(c.graph));
        CHECK(dense_vertices(c.graph).members == c.roles.designated_dense());
        CHECK(component_count(c.graph) == (p.connected ? 1 : r));
      }
    }
  }

  TEST_CASE("degree audit") {
    const GadgetParams p{2, 3, true};
    const auto c = build_construction(p);
    const auto rep = audit_degrees(c.graph, c.roles, p);
    CHECK(rep.pass);
    REQUIRE(rep.checks.size() == 4);
    CHECK(rep.checks[0].expected == 12);
    CHECK(rep.checks[0].observed_min == 12);
    CHECK(rep.checks[1].expected == 15);
    CHECK(rep.checks[2].expected == 15);
    CHECK(rep.checks[3].expected == 13);
    CHECK(rep.checks[3].observed_max == 13);  // w-vertices carry the connecting edge
    CHECK(rep.checks[3].relation == "<=");

    const auto q = build_construction({1, 2, true});
    const auto small = audit_degrees(q.graph, q.roles, {1, 2, true});
    CHECK(small.pass);
    CHECK(small.checks[0].expected == 3);
    CHECK(small.checks[1].expected == 5);
    CHECK(small.checks[3].expected == 4);

    // tampering inside C(G_1)
    const auto& cl = c.roles.gadgets[0].clique;
    const Graph t = c.graph.without_edge({cl[0], cl[1]});
    const auto bad = audit_degrees(t, c.roles, p);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.checks[0].pass);
    CHECK(bad.checks[0].offending == std::optional<VertexId>{cl[0]});

    CHECK_THROWS_AS(audit_degrees(q.graph, c.roles, p), GraphError);
  }

  TEST_CASE("certificate") {
    const auto check = [](GadgetParams p, std::size_t bound) {
      const auto c = build_construction(p);
      const auto cert = upper_bound_certificate(c.graph, c.roles, p);
      CHECK(cert.pass());
      CHECK(cert.bound == std::optional<std::size_t>{bound});
      CHECK(cert.checks.size() == 7);
      CHECK_FALSE(cert.first_failure().has_value());
    };
    check({2, 3, true}, 14);
    check({1, 2, true}, 5);
    check({3, 4, true}, 27);  // m = 30
    check({2, 2, false}, 10);  // m = 12, k = r allowed without connecting edges
  }

  TEST_CASE("certificate stops at the first failing step") {
    const GadgetParams p{2, 3, true};
    const auto c = build_construction(p);
    const auto& cl = c.roles.gadgets[0].clique;
    const auto cut = upper_bound_certificate(c.graph.without_edge({cl[0], cl[1]}), c.roles, p);
    CHECK_FALSE(cut.pass());
    CHECK(cut.first_failure() == std::optional<std::string>{"degree-audit"});
    CHECK(cut.checks.size() == 1);

    // Degrees intact but the layout lies about which vertex is v^1.
    auto lying = c.roles;
    std::swap(lying.gadgets[0].v1, lying.gadgets[0].s1[0]);
    const auto wrong = upper_bound_certificate(c.graph, lying, p);
    CHECK_FALSE(wrong.pass());
    CHECK(wrong.first_failure() == std::optional<std::string>{"attachment-neighborhood"});

    // Role map from another construction.
    const auto other = build_construction({1, 2, true});
    CHECK_THROWS_AS(upper_bound_certificate(c.graph, other.roles, p), GraphError);
  }

  TEST_CASE("property: random mutations near D never pass silently") {
    const GadgetParams p{1, 2, true};
    const auto c = build_construction(p);
    const auto dense = c.roles.designated_dense();
    for (const auto& e : c.graph.edges()) {
      if (!std::binary_search(dense.begin(), dense.end(), e.u) && !std::binary_search(dense.begin(), dense.end(), e.v))
        continue;
      const Graph h = c.graph.without_edge(e);
      CHECK_FALSE((audit_degrees(h, c.roles, p).pass && upper_bound_certificate(h, c.roles, p).pass()));
    }
  }

  TEST_CASE("DOT rendering") {
    const auto c = build_construction({2, 3, true});
    const auto dot = construction_to_dot(c.graph, c.roles);
    CHECK(dot.rfind("graph G {", 0) == 0);
    CHECK(dot.find("subgraph cluster_0") != std::string::npos);
    CHECK(dot.find("subgraph cluster_1") != std::string::npos);
    CHECK(dot.find("penwidth=3") != std::string::npos);
    CHECK(dot.find("fillcolor=tomato") != std::string::npos);
    CHECK(dot.back() == '\n');
  }
}
