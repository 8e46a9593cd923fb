#include "bchrom/graph.hpp"

#include <algorithm>

#include "bchrom/structure.hpp"

namespace bchrom {

std::string to_string(const EdgeId& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw GraphError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                       " has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (VertexId u = 0; u < n; ++u) {
    auto& row = g.adj_[u];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) {
      throw GraphError("duplicate edge " + to_string(EdgeId(u, *dup)));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const EdgeId> edges) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
  return from_edges(n, pairs);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adj_) best = std::max(best, row.size());
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto& row = adj_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (VertexId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without_edge(EdgeId e) const {
  if (e.v >= order() || !has_edge(e.u, e.v)) {
    throw GraphError("edge " + to_string(e) + " is not in the graph");
  }
  Graph g = *this;
  auto drop = [](std::vector<VertexId>& row, VertexId x) {
    row.erase(std::lower_bound(row.begin(), row.end(), x));
  };
  drop(g.adj_[e.u], e.v);
  drop(g.adj_[e.v], e.u);
  --g.edge_count_;
  return g;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<std::int64_t> pos(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (VertexId w : adj_[keep[i]]) {
      if (pos[w] > static_cast<std::int64_t>(i)) {
        es.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(pos[w]));
      }
    }
  }
  return from_edges(keep.size(), es);
}

Graph Graph::relabeled(std::span<const VertexId> perm) const {
  if (perm.size() != order()) throw GraphError("relabeling has wrong length");
  std::vector<EdgeId> es;
  es.reserve(edge_count_);
  for (const auto& e : edges()) es.emplace_back(perm[e.u], perm[e.v]);
  return from_edges(order(), es);
}

Tree Tree::from_graph(Graph g) {
  if (!is_tree(g)) throw GraphError("graph is not a tree");
  return Tree(std::move(g));
}

Graph path_graph(std::size_t n) {
  std::vector<EdgeId> es;
  for (VertexId i = 1; i < n; ++i) es.emplace_back(i - 1, i);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<EdgeId> es;
  for (VertexId i = 0; i < n; ++i) es.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return Graph::from_edges(n, es);
}

Graph complete_graph(std::size_t n) {
  std::vector<EdgeId> es;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph star_graph(std::size_t leaves) {
  std::vector<EdgeId> es;
  for (VertexId i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto shift = static_cast<VertexId>(a.order());
  std::vector<EdgeId> es = a.edges();
  for (const auto& e : b.edges()) es.emplace_back(e.u + shift, e.v + shift);
  return Graph::from_edges(a.order() + b.order(), es);
}

}  // namespace bchrom
