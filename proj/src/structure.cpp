#include "bchrom/structure.hpp"

#include <algorithm>
#include <numeric>

namespace bchrom {

namespace {

std::vector<std::size_t> component_ids(const Graph& g, std::size_t& count) {
  const std::size_t n = g.order();
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::vector<VertexId> stack;
  count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != SIZE_MAX) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (comp[w] == SIZE_MAX) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace

std::size_t component_count(const Graph& g) {
  std::size_t count = 0;
  component_ids(g, count);
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

std::vector<std::vector<VertexId>> blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<EdgeId> edge_stack;
  std::vector<std::vector<VertexId>> out;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;  // index into neighbors(v)
  };
  std::vector<Frame> frames;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != 0 || g.degree(root) == 0) continue;
    disc[root] = low[root] = ++timer;
    frames.push_back({root, root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        VertexId w = nbrs[f.next++];
        if (disc[w] == 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = ++timer;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const VertexId child = f.v;
      const VertexId parent = f.parent;
      frames.pop_back();
      if (frames.empty()) break;
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) {
        // parent separates the subtree at child: pop one block
        std::vector<VertexId> block;
        const EdgeId tree_edge(parent, child);
        while (true) {
          EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_block_graph(const Graph& g) {
  for (const auto& b : blocks(g)) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (g.degree(b[i]) + 1 < b.size()) return false;
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (!g.has_edge(b[i], b[j])) return false;
      }
    }
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  for (VertexId c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        for (std::size_t d = b + 1; d < nb.size(); ++d) {
          if (!g.has_edge(nb[a], nb[d]) && !g.has_edge(nb[b], nb[d])) return false;
        }
      }
    }
  }
  return true;
}

LineGraph line_graph(const Graph& t) {
  if (t.size() == 0) throw GraphError("line graph of an edgeless graph is empty");
  LineGraph lg;
  lg.map.backward = t.edges();
  for (VertexId i = 0; i < lg.map.backward.size(); ++i) lg.map.forward.emplace(lg.map.backward[i], i);

  std::vector<EdgeId> ledges;
  for (VertexId x = 0; x < t.order(); ++x) {
    auto nb = t.neighbors(x);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        ledges.emplace_back(lg.map.forward.at(EdgeId(x, nb[a])), lg.map.forward.at(EdgeId(x, nb[b])));
      }
    }
  }
  lg.graph = Graph::from_edges(lg.map.backward.size(), ledges);
  return lg;
}

RootTree root_tree(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    throw PreconditionError("connected", "root tree needs a connected graph");
  }
  if (!is_claw_free(g)) throw PreconditionError("claw_free", "root tree needs a claw-free graph");
  if (!is_block_graph(g)) {
    throw PreconditionError("block_graph", "root tree needs every block to be a clique");
  }

  const std::size_t n = g.order();
  if (n == 1) {
    const EdgeId e(0, 1);
    LineGraphMap map;
    map.backward = {e};
    map.forward.emplace(e, 0);
    return {Tree::from_graph(Graph::from_edges(2, std::span<const EdgeId>(&e, 1))), std::move(map)};
  }

  const auto bl = blocks(g);
  std::vector<std::vector<VertexId>> owners(n);
  for (VertexId b = 0; b < bl.size(); ++b) {
    for (VertexId x : bl[b]) owners[x].push_back(b);
  }

  VertexId next = static_cast<VertexId>(bl.size());
  std::vector<EdgeId> tree_edges(n);
  for (VertexId x = 0; x < n; ++x) {
    // claw-freeness keeps every vertex in at most two blocks
    if (owners[x].size() == 2) {
      tree_edges[x] = EdgeId(owners[x][0], owners[x][1]);
    } else if (owners[x].size() == 1) {
      tree_edges[x] = EdgeId(owners[x][0], next++);
    } else {
      throw PreconditionError("claw_free",
                              "vertex " + std::to_string(x) + " lies in " +
                                  std::to_string(owners[x].size()) + " blocks");
    }
  }

  LineGraphMap map;
  map.backward = tree_edges;
  for (VertexId x = 0; x < n; ++x) map.forward.emplace(tree_edges[x], x);
  return {Tree::from_graph(Graph::from_edges(next, tree_edges)), std::move(map)};
}

bool reproduces_line_graph(const Graph& g, const Tree& t, const LineGraphMap& map) {
  const Graph& tg = t.graph();
  if (tg.size() != g.order() || map.backward.size() != g.order() ||
      map.forward.size() != g.order()) {
    return false;
  }
  auto lg = line_graph(tg);
  std::vector<VertexId> to_g(lg.graph.order());
  for (VertexId j = 0; j < lg.graph.order(); ++j) {
    auto it = map.forward.find(lg.map.backward[j]);
    if (it == map.forward.end()) return false;
    to_g[j] = it->second;
    if (it->second >= g.order() || map.backward[it->second] != lg.map.backward[j]) return false;
  }
  std::vector<VertexId> sorted = to_g;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return lg.graph.relabeled(to_g) == g;
}

}  // namespace bchrom
