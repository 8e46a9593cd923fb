#pragma once

#include <cstddef>
#include <vector>

#include "bchrom/graph.hpp"

namespace bchrom {

/// Largest k such that at least k vertices have degree >= k-1. An upper bound
/// on the b-chromatic number, since every color needs a b-vertex of that degree.
std::size_t m_degree(const Graph& g);

struct DenseSet {
  std::size_t m = 0;
  std::vector<VertexId> members;  // {u : d(u) >= m-1}, sorted
};

DenseSet dense_vertices(const Graph& g);

/// |D(G)| = m(G) and every dense vertex has degree exactly m(G)-1.
bool is_tight(const Graph& g);

}  // namespace bchrom
