#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bchrom/graph.hpp"
#include "bchrom/structure.hpp"

namespace bchrom {

/// Candidate b-vertex set: vertices of a tree, or edges of a tree when
/// working through the line-graph representation.
struct WSet {
  enum class Mode { Vertex, Edge };

  Mode mode = Mode::Vertex;
  std::vector<VertexId> vertices;  // sorted, Vertex mode
  std::vector<EdgeId> edges;       // sorted, Edge mode

  static WSet of_vertices(std::vector<VertexId> vs);
  static WSet of_edges(std::vector<EdgeId> es);

  bool contains(VertexId v) const;
  bool contains(const EdgeId& e) const;
  std::size_t count() const { return mode == Mode::Vertex ? vertices.size() : edges.size(); }
};

/// Vertices at distance exactly two from v.
std::vector<VertexId> dist2(const Tree& t, VertexId v);

/// W encircles v: W is inside N(v) and dist2(v), and every member u of W at
/// distance two is reached through a common neighbor in W of degree m(T)-1.
/// Throws std::invalid_argument if v is in W or W is in edge mode.
bool encircles(const Tree& t, const WSet& w, VertexId v);

/// The smallest-id pivot, if T is pivoted: |D(T)| = m(T) and some non-dense v
/// is encircled by D(T).
std::optional<VertexId> is_pivoted(const Tree& t);

bool is_good_set(const Tree& t, const WSet& w);

struct GoodSetSearch {
  enum class Status { Found, None, Indeterminate };
  Status status = Status::None;
  std::optional<WSet> good_set;
  std::uint64_t nodes = 0;
};

/// Search the m-subsets of D(T) for a good set. Candidates are ordered by
/// degree (highest first, then id), so the answer is deterministic. Running
/// out of `node_budget` subsets yields Indeterminate.
GoodSetSearch search_good_set(const Tree& t, std::uint64_t node_budget = 10'000'000);

struct InnerOuterPartition {
  std::vector<EdgeId> universe;  // N(W) \ W
  std::vector<EdgeId> inner;
  std::vector<EdgeId> outer;
};

/// Edge form: e in N(W)\W is inner iff it is the single edge strictly between
/// two W-edges at line-graph distance 2. W-edges that share an endpoint have
/// nothing between them.
InnerOuterPartition classify_inner_outer_edges(const Tree& t, const WSet& w);

/// Outer edges adjacent to at least two members of W.
std::vector<EdgeId> side_edges(const Tree& t, const WSet& w);

struct JpWitness {
  VertexId side_vertex = 0;                // in the input graph
  EdgeId side_edge;                        // in the recovered tree
  std::vector<VertexId> w_neighbors;       // input-graph vertices, >= 2
  std::vector<EdgeId> w_neighbor_edges;    // their tree edges
};

/// Recover the root tree of g, move w onto its edges, and report the side
/// edge of smallest input id together with its W-neighbors. Root-tree
/// PreconditionErrors propagate.
std::optional<JpWitness> jp_failure_witness(const Graph& g, const std::vector<VertexId>& w);

}  // namespace bchrom
