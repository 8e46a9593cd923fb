#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bchrom {

using VertexId = std::uint32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge stored with u < v.
struct EdgeId {
  VertexId u = 0;
  VertexId v = 0;

  EdgeId() = default;
  EdgeId(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(VertexId x) const { return u == x || v == x; }
  bool shares_endpoint(const EdgeId& o) const {
    return touches(o.u) || touches(o.v);
  }

  auto operator<=>(const EdgeId&) const = default;
};

std::string to_string(const EdgeId& e);

/// Simple undirected graph with sorted adjacency lists.
///
/// Immutable once built. Construction validates the two invariants that every
/// algorithm here relies on: no self-loops and no parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws GraphError on a loop, a duplicate edge, or an endpoint >= n.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<VertexId, VertexId>> edges);
  static Graph from_edges(std::size_t n, std::span<const EdgeId> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }
  std::size_t degree(VertexId u) const { return adj_[u].size(); }
  std::size_t max_degree() const;

  std::span<const VertexId> neighbors(VertexId u) const { return adj_[u]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// All edges in lexicographic (u, v) order.
  std::vector<EdgeId> edges() const;

  /// The graph with the given edge removed. Throws if it is not present.
  Graph without_edge(EdgeId e) const;

  /// Induced subgraph on `keep` (sorted, unique); vertex i of the result is keep[i].
  Graph induced(std::span<const VertexId> keep) const;

  /// Relabel: vertex u of this graph becomes perm[u].
  Graph relabeled(std::span<const VertexId> perm) const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

/// A graph together with the fact that it is connected and acyclic.
class Tree {
 public:
  /// Throws GraphError if g is not a tree.
  static Tree from_graph(Graph g);

  const Graph& graph() const { return g_; }
  std::size_t order() const { return g_.order(); }

 private:
  explicit Tree(Graph g) : g_(std::move(g)) {}
  Graph g_;
};

// Named constructors used throughout the tests and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // K_{1,leaves}, center 0
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace bchrom
