#include "bchrom/oracle.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace bchrom {

namespace {

struct Enumerator {
  std::size_t n;
  std::array<std::uint32_t, kOracleMaxOrder> nbr{};  // adjacency bitmasks
  std::array<int, kOracleMaxOrder> col{};
  std::size_t best = 0;

  bool is_b_coloring(int k) const {
    std::uint32_t realized = 0;
    const std::uint32_t all = (1U << k) - 1;
    for (std::size_t u = 0; u < n; ++u) {
      std::uint32_t seen = 1U << col[u];
      for (std::size_t w = 0; w < n; ++w) {
        if ((nbr[u] >> w) & 1U) seen |= 1U << col[w];
      }
      if (seen == all) realized |= 1U << col[u];
    }
    return realized == all;
  }

  // col[0..i) fixed, using colors 0..used-1
  void walk(std::size_t i, int used) {
    if (i == n) {
      if (static_cast<std::size_t>(used) > best && is_b_coloring(used)) best = used;
      return;
    }
    for (int c = 0; c <= used; ++c) {
      bool clash = false;
      for (std::size_t w = 0; w < i && !clash; ++w) clash = ((nbr[i] >> w) & 1U) && col[w] == c;
      if (clash) continue;
      col[i] = c;
      walk(i + 1, c == used ? used + 1 : used);
    }
  }
};

}  // namespace

std::size_t brute_force_b_oracle(const Graph& g) {
  if (g.order() > kOracleMaxOrder) {
    throw std::invalid_argument("oracle refuses graphs with more than " +
                                std::to_string(kOracleMaxOrder) + " vertices");
  }
  Enumerator e;
  e.n = g.order();
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId w : g.neighbors(u)) e.nbr[u] |= 1U << w;
  }
  e.walk(0, 0);
  return e.best;
}

}  // namespace bchrom
