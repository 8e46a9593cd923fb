// The enumerators and reference checks used by the other suites.

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "bchrom/structure.hpp"
#include "support/enumerate.hpp"

using namespace bchrom;
using namespace bchrom::testing;

TEST_SUITE("support") {
  TEST_CASE("graph counts per order match the known sequence") {
    const std::vector<std::size_t> all = {1, 1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected = {1, 1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 0; n <= 7; ++n) {
      CHECK(all_graphs(n).size() == all[n]);
      if (n >= 1) CHECK(all_connected_graphs(n).size() == connected[n]);  // the empty graph counts as disconnected
    }
  }

  TEST_CASE("tree counts per order match the known sequence") {
    const std::vector<std::size_t> trees = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto ts = all_trees(n);
      CHECK(ts.size() == trees[n - 1]);
      for (const auto& t : ts) CHECK(is_tree(t));
    }
  }

  TEST_CASE("canonical code is invariant under relabeling and separates orders") {
    std::mt19937_64 rng(51);
    for (const auto& g : all_graphs(6)) {
      std::vector<VertexId> perm(g.order());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_code(g.relabeled(perm)) == canonical_code(g));
    }
    CHECK(canonical_code(Graph(3)) != canonical_code(Graph(4)));
    CHECK(canonical_code(path_graph(4)) != canonical_code(star_graph(3)));
    CHECK_THROWS(canonical_code(Graph(12)));
  }

  TEST_CASE("random generators") {
    std::mt19937_64 rng(52);
    for (std::size_t n = 1; n <= 40; ++n) {
      CHECK(is_tree(random_tree(n, rng)));
      const Graph g = random_connected_graph(n, rng);
      CHECK(g.order() == n);
      CHECK(is_connected(g));
    }
  }

  TEST_CASE("edge-bijection isomorphism check") {
    const Graph p4 = path_graph(4);
    const auto es = p4.edges();
    // reversal: 0-1 -> 2-3, 1-2 -> 1-2, 2-3 -> 0-1
    CHECK(edge_bijection_is_tree_isomorphism(p4, p4, {es[2], es[1], es[0]}));
    // swapping an end edge with the middle edge is not induced by a vertex map
    CHECK_FALSE(edge_bijection_is_tree_isomorphism(p4, p4, {es[1], es[0], es[2]}));
    CHECK_FALSE(edge_bijection_is_tree_isomorphism(p4, star_graph(3), star_graph(3).edges()));
    const Graph k2 = path_graph(2);
    CHECK(edge_bijection_is_tree_isomorphism(k2, k2, k2.edges()));
  }

  TEST_CASE("reference block and claw checks") {
    CHECK(blocks_by_vertex_deletion(path_graph(4)).size() == 3);
    CHECK(blocks_by_vertex_deletion(cycle_graph(5)).size() == 1);
    CHECK(has_induced_claw_brute_force(star_graph(3)));
    CHECK_FALSE(has_induced_claw_brute_force(complete_graph(5)));
  }

  TEST_CASE("pivoted example tree shape") {
    const Graph t = pivoted_example_tree();
    CHECK(t.order() == 11);
    CHECK(is_tree(t));
    CHECK(t.degree(0) == 2);
    CHECK(t.degree(1) == 3);
    CHECK(t.degree(3) == 3);
  }
}
