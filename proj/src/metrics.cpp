#include "bchrom/metrics.hpp"

#include <algorithm>
#include <functional>

namespace bchrom {

std::size_t m_degree(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  for (VertexId u = 0; u < g.order(); ++u) deg[u] = g.degree(u);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  // deg[k-1] >= k-1 is monotone in k, so the first failure ends the scan
  std::size_t m = 0;
  while (m < deg.size() && deg[m] >= m) ++m;
  return m;
}

DenseSet dense_vertices(const Graph& g) {
  DenseSet d;
  d.m = m_degree(g);
  for (VertexId u = 0; u < g.order(); ++u) {
    if (g.degree(u) + 1 >= d.m) d.members.push_back(u);
  }
  return d;
}

bool is_tight(const Graph& g) {
  auto d = dense_vertices(g);
  if (d.members.size() != d.m) return false;
  return std::all_of(d.members.begin(), d.members.end(),
                     [&](VertexId u) { return g.degree(u) + 1 == d.m; });
}

}  // namespace bchrom
