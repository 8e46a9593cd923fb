#pragma once

#include <cstddef>

#include "bchrom/graph.hpp"

namespace bchrom {

constexpr std::size_t kOracleMaxOrder = 10;

/// b(g) by exhaustive enumeration, independent of the search solver.
///
/// Walks every partition of V into color classes (restricted growth strings,
/// i.e. every surjective coloring up to renaming colors, which preserves the
/// b-coloring property) and keeps the largest class count that is proper
/// with a b-vertex in every class. Refuses n > kOracleMaxOrder with
/// std::invalid_argument.
std::size_t brute_force_b_oracle(const Graph& g);

}  // namespace bchrom
