#include "support/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "bchrom/structure.hpp"

namespace bchrom::testing {

namespace {

std::vector<std::size_t> refine(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (VertexId v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (VertexId w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> next(n);
    for (VertexId v = 0; v < n; ++v) {
      next[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    color = std::move(next);
    if (sorted.size() == classes) return color;
    classes = sorted.size();
  }
}

struct CodeSearch {
  const Graph& g;
  std::vector<std::vector<VertexId>> cells;
  std::vector<VertexId> order;
  std::uint64_t best = ~std::uint64_t{0};

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (std::size_t j = 1; j < order.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) c = (c << 1) | (g.has_edge(order[i], order[j]) ? 1U : 0U);
    return c;
  }

  void walk(std::size_t cell) {
    if (cell == cells.size()) {
      best = std::min(best, code());
      return;
    }
    auto members = cells[cell];
    std::sort(members.begin(), members.end());
    do {
      order.insert(order.end(), members.begin(), members.end());
      walk(cell + 1);
      order.resize(order.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  }
};

std::string rooted_code(const Graph& t, VertexId v, VertexId parent) {
  std::vector<std::string> kids;
  for (VertexId w : t.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::string tree_code(const Graph& t) {
  // centers by repeated leaf stripping
  const std::size_t n = t.order();
  if (n == 1) return "()";
  std::vector<std::size_t> deg(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      for (VertexId w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (VertexId c : layer) {
    auto s = rooted_code(t, c, c);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("canonical_code supports at most 11 vertices");
  auto color = refine(g);
  std::size_t classes = 0;
  for (auto c : color) classes = std::max(classes, c + 1);
  CodeSearch s{g, std::vector<std::vector<VertexId>>(classes), {}, ~std::uint64_t{0}};
  for (VertexId v = 0; v < g.order(); ++v) s.cells[color[v]].push_back(v);
  s.walk(0);
  return s.best | (static_cast<std::uint64_t>(g.order()) << 56);  // order in the top byte
}

std::vector<Graph> all_graphs(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n <= 1) {
    out.push_back(Graph(n));
  } else {
    std::map<std::uint64_t, Graph> seen;
    for (const auto& base : all_graphs(n - 1)) {
      const auto es = base.edges();
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        auto grown = es;
        for (VertexId i = 0; i + 1 < n; ++i) {
          if ((mask >> i) & 1U) grown.emplace_back(i, static_cast<VertexId>(n - 1));
        }
        Graph g = Graph::from_edges(n, grown);
        seen.emplace(canonical_code(g), std::move(g));
      }
    }
    for (auto& [code, g] : seen) out.push_back(std::move(g));
  }
  cache.emplace(n, out);
  return out;
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> all_trees(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1));
  } else if (n > 1) {
    std::map<std::string, Graph> seen;
    for (const auto& base : all_trees(n - 1)) {
      for (VertexId v = 0; v + 1 < n; ++v) {
        auto es = base.edges();
        es.emplace_back(v, static_cast<VertexId>(n - 1));
        Graph t = Graph::from_edges(n, es);
        seen.emplace(tree_code(t), std::move(t));
      }
    }
    for (auto& [code, t] : seen) out.push_back(std::move(t));
  }
  cache.emplace(n, out);
  return out;
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 1) return Graph(n);
  // random Prüfer sequence
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<VertexId> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (auto x : seq) ++deg[x];
  std::set<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }
  std::vector<EdgeId> es;
  for (auto x : seq) {
    VertexId leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    es.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.insert(x);
  }
  es.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return Graph::from_edges(n, es);
}

Graph random_connected_graph(std::size_t n, std::mt19937_64& rng) {
  Graph t = random_tree(n, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = 0.1 + 0.7 * unit(rng);
  auto es = t.edges();
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (!t.has_edge(i, j) && unit(rng) < p) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph pivoted_example_tree() {
  const std::vector<EdgeId> es = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5},
                                  {2, 6}, {3, 7}, {3, 8}, {5, 9}, {5, 10}};
  return Graph::from_edges(11, es);
}

}  // namespace bchrom::testing

namespace bchrom::testing {

bool edge_bijection_is_tree_isomorphism(const Graph& a, const Graph& b, const std::vector<EdgeId>& image) {
  const auto ea = a.edges();
  if (a.order() != b.order() || ea.size() != image.size() || b.size() != ea.size()) return false;
  if (ea.empty()) return a.order() == b.order();
  std::vector<std::vector<std::size_t>> incident(a.order());
  for (std::size_t i = 0; i < ea.size(); ++i) {
    incident[ea[i].u].push_back(i);
    incident[ea[i].v].push_back(i);
  }
  auto common = [](const EdgeId& x, const EdgeId& y) -> std::int64_t {
    if (x.u == y.u || x.u == y.v) return x.u;
    if (x.v == y.u || x.v == y.v) return x.v;
    return -1;
  };
  std::vector<std::int64_t> map(a.order(), -1);
  for (VertexId x = 0; x < a.order(); ++x) {
    const auto& inc = incident[x];
    if (inc.size() >= 2) {
      std::int64_t c = common(image[inc[0]], image[inc[1]]);
      if (c < 0) return false;
      map[x] = c;
    }
  }
  for (VertexId x = 0; x < a.order(); ++x) {
    if (incident[x].size() != 1) continue;
    const std::size_t i = incident[x][0];
    const VertexId other = ea[i].u == x ? ea[i].v : ea[i].u;
    const EdgeId img = image[i];
    if (map[other] >= 0) {
      map[x] = img.u == map[other] ? img.v : img.u;
    } else {
      // a is a single edge
      map[x] = x == ea[i].u ? img.u : img.v;
    }
  }
  std::vector<VertexId> perm(a.order());
  std::vector<bool> used(b.order(), false);
  for (VertexId x = 0; x < a.order(); ++x) {
    if (map[x] < 0 || used[map[x]]) return false;
    used[map[x]] = true;
    perm[x] = static_cast<VertexId>(map[x]);
  }
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (EdgeId(perm[ea[i].u], perm[ea[i].v]) != image[i]) return false;
  }
  return a.relabeled(perm) == b;
}

std::vector<std::vector<VertexId>> blocks_by_vertex_deletion(const Graph& g) {
  const auto es = g.edges();
  std::vector<std::size_t> parent(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto connected_without = [&](VertexId cut, VertexId s, VertexId t) {
    std::vector<bool> seen(g.order(), false);
    std::vector<VertexId> stack{s};
    seen[s] = true;
    seen[cut] = true;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (x == t) return true;
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto& e = es[i];
      const auto& f = es[j];
      VertexId shared, x, y;
      if (e.u == f.u) { shared = e.u; x = e.v; y = f.v; }
      else if (e.u == f.v) { shared = e.u; x = e.v; y = f.u; }
      else if (e.v == f.u) { shared = e.v; x = e.u; y = f.v; }
      else if (e.v == f.v) { shared = e.v; x = e.u; y = f.u; }
      else continue;
      if (connected_without(shared, x, y)) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::set<VertexId>> groups;
  for (std::size_t i = 0; i < es.size(); ++i) {
    groups[find(i)].insert(es[i].u);
    groups[find(i)].insert(es[i].v);
  }
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, vs] : groups) out.emplace_back(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool has_induced_claw_brute_force(const Graph& g) {
  const VertexId n = static_cast<VertexId>(g.order());
  for (VertexId c = 0; c < n; ++c)
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        for (VertexId d = b + 1; d < n; ++d) {
          if (c == a || c == b || c == d) continue;
          if (g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(c, d) && !g.has_edge(a, b) &&
              !g.has_edge(a, d) && !g.has_edge(b, d)) {
            return true;
          }
        }
  return false;
}

}  // namespace bchrom::testing
