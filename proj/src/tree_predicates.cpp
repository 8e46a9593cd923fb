#include "bchrom/tree_predicates.hpp"

#include <algorithm>
#include <stdexcept>

#include "bchrom/metrics.hpp"

namespace bchrom {

WSet WSet::of_vertices(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  WSet w;
  w.mode = Mode::Vertex;
  w.vertices = std::move(vs);
  return w;
}

WSet WSet::of_edges(std::vector<EdgeId> es) {
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  WSet w;
  w.mode = Mode::Edge;
  w.edges = std::move(es);
  return w;
}

bool WSet::contains(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool WSet::contains(const EdgeId& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

namespace {

void require_vertex_mode(const WSet& w) {
  if (w.mode != WSet::Mode::Vertex) throw std::invalid_argument("W must be a vertex set here");
}

void require_edge_mode(const Tree& t, const WSet& w) {
  if (w.mode != WSet::Mode::Edge) throw std::invalid_argument("W must be an edge set here");
  for (const auto& e : w.edges) {
    if (e.v >= t.order() || !t.graph().has_edge(e.u, e.v)) {
      throw std::invalid_argument("W member " + to_string(e) + " is not a tree edge");
    }
  }
}

bool encircles_unchecked(const Graph& g, std::size_t m, const WSet& w, VertexId v) {
  const auto d2 = [&] {
    std::vector<VertexId> out;
    for (VertexId a : g.neighbors(v))
      for (VertexId b : g.neighbors(a))
        if (b != v) out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
  }();
  for (VertexId u : w.vertices) {
    if (g.has_edge(v, u)) continue;
    if (!std::binary_search(d2.begin(), d2.end(), u)) return false;
    bool bridged = false;
    for (VertexId x : g.neighbors(u)) {
      if (g.has_edge(v, x) && w.contains(x) && g.degree(x) + 1 == m) {
        bridged = true;
        break;
      }
    }
    if (!bridged) return false;
  }
  return true;
}

// Every vertex outside W of degree >= m must have a neighbor in W.
bool dominates_heavy(const Graph& g, std::size_t m, const WSet& w) {
  for (VertexId x = 0; x < g.order(); ++x) {
    if (g.degree(x) < m || w.contains(x)) continue;
    auto nb = g.neighbors(x);
    if (std::none_of(nb.begin(), nb.end(), [&](VertexId y) { return w.contains(y); })) return false;
  }
  return true;
}

bool encircles_none(const Graph& g, std::size_t m, const WSet& w) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!w.contains(v) && encircles_unchecked(g, m, w, v)) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexId> dist2(const Tree& t, VertexId v) {
  const Graph& g = t.graph();
  std::vector<VertexId> out;
  for (VertexId a : g.neighbors(v))
    for (VertexId b : g.neighbors(a))
      if (b != v) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

bool encircles(const Tree& t, const WSet& w, VertexId v) {
  require_vertex_mode(w);
  if (w.contains(v)) throw std::invalid_argument("encircled vertex must lie outside W");
  return encircles_unchecked(t.graph(), m_degree(t.graph()), w, v);
}

std::optional<VertexId> is_pivoted(const Tree& t) {
  const Graph& g = t.graph();
  auto d = dense_vertices(g);
  if (d.members.size() != d.m) return std::nullopt;
  WSet w = WSet::of_vertices(d.members);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!w.contains(v) && encircles_unchecked(g, d.m, w, v)) return v;
  }
  return std::nullopt;
}

bool is_good_set(const Tree& t, const WSet& w) {
  require_vertex_mode(w);
  const Graph& g = t.graph();
  const std::size_t m = m_degree(g);
  if (w.vertices.size() != m) return false;
  for (VertexId u : w.vertices) {
    if (u >= g.order() || g.degree(u) + 1 < m) return false;
  }
  return dominates_heavy(g, m, w) && encircles_none(g, m, w);
}

GoodSetSearch search_good_set(const Tree& t, std::uint64_t node_budget) {
  const Graph& g = t.graph();
  auto d = dense_vertices(g);
  std::vector<VertexId> cand = d.members;
  std::stable_sort(cand.begin(), cand.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

  GoodSetSearch result;
  const std::size_t m = d.m;
  if (cand.size() < m) return result;

  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    if (result.nodes >= node_budget) {
      result.status = GoodSetSearch::Status::Indeterminate;
      return result;
    }
    ++result.nodes;
    std::vector<VertexId> members;
    members.reserve(m);
    for (auto i : idx) members.push_back(cand[i]);
    WSet w = WSet::of_vertices(std::move(members));
    if (dominates_heavy(g, m, w) && encircles_none(g, m, w)) {
      result.status = GoodSetSearch::Status::Found;
      result.good_set = std::move(w);
      return result;
    }
    // next combination in lexicographic index order
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == cand.size() - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return result;
}

InnerOuterPartition classify_inner_outer_edges(const Tree& t, const WSet& w) {
  require_edge_mode(t, w);
  const Graph& g = t.graph();
  // number of W-edges at each tree vertex
  std::vector<std::size_t> w_at(g.order(), 0);
  for (const auto& e : w.edges) {
    ++w_at[e.u];
    ++w_at[e.v];
  }
  InnerOuterPartition part;
  for (const auto& e : g.edges()) {
    if (w.contains(e) || (w_at[e.u] == 0 && w_at[e.v] == 0)) continue;
    part.universe.push_back(e);
    // In a tree, a W-edge at each end of e forms a 3-edge path with e in the middle,
    // and those are exactly the W-pairs at line-graph distance 2 with e between them.
    (w_at[e.u] > 0 && w_at[e.v] > 0 ? part.inner : part.outer).push_back(e);
  }
  return part;
}

std::vector<EdgeId> side_edges(const Tree& t, const WSet& w) {
  auto part = classify_inner_outer_edges(t, w);
  std::vector<EdgeId> out;
  for (const auto& e : part.outer) {
    std::size_t touching = 0;
    for (const auto& f : w.edges) touching += e.shares_endpoint(f) ? 1 : 0;
    if (touching >= 2) out.push_back(e);
  }
  return out;
}

std::optional<JpWitness> jp_failure_witness(const Graph& g, const std::vector<VertexId>& w) {
  for (VertexId x : w) {
    if (x >= g.order()) throw std::invalid_argument("W member " + std::to_string(x) + " out of range");
  }
  auto root = root_tree(g);
  std::vector<EdgeId> wedges;
  for (VertexId x : w) wedges.push_back(root.map.backward[x]);
  WSet ws = WSet::of_edges(std::move(wedges));

  const auto sides = side_edges(root.tree, ws);
  if (sides.empty()) return std::nullopt;

  VertexId best = UINT32_MAX;
  for (const auto& e : sides) best = std::min(best, root.map.forward.at(e));

  JpWitness wit;
  wit.side_vertex = best;
  wit.side_edge = root.map.backward[best];
  for (const auto& f : ws.edges) {
    if (wit.side_edge.shares_endpoint(f)) {
      wit.w_neighbor_edges.push_back(f);
      wit.w_neighbors.push_back(root.map.forward.at(f));
    }
  }
  std::sort(wit.w_neighbors.begin(), wit.w_neighbors.end());
  return wit;
}

}  // namespace bchrom
