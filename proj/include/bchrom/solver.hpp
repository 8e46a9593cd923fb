#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bchrom/graph.hpp"

namespace bchrom {

/// Total assignment vertex -> color in 1..k (0 marks an unassigned vertex).
struct Coloring {
  std::vector<std::uint32_t> colors;
  std::size_t k = 0;
};

struct ColoringReport {
  bool proper = false;
  std::vector<std::uint32_t> realized;  // colors having a b-vertex, ascending
  bool is_b_coloring = false;
};

/// Throws std::invalid_argument on a partial assignment or a color outside 1..k.
ColoringReport verify_coloring(const Graph& g, const Coloring& c);

struct SolveConfig {
  std::uint64_t node_budget = 100'000'000;
  double time_budget_seconds = 300.0;
  // The search is deterministic; the seed is carried for reproducible reports.
  std::uint64_t seed = 0;
};

enum class SolveStatus { Found, Exhausted, BudgetExceeded };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Exhausted;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

/// Does g have a b-coloring with exactly k colors?
///
/// For each k-subset X of the vertices of degree >= k-1 (colors assigned to X in
/// id order, which is no loss by color symmetry), backtrack over the remaining
/// vertices with forward checking: a member of X fails as soon as its
/// uncolored neighbors cannot supply the colors still missing around it.
/// Requires 1 <= k <= min(n, 64).
SolveOutcome b_decision(const Graph& g, std::size_t k, const SolveConfig& cfg = {});

struct BChromaticResult {
  SolveStatus status = SolveStatus::Found;  // Found or BudgetExceeded
  std::size_t b = 0;                        // exact when Found
  std::optional<Coloring> witness;
  // Verified bounds; equal to b when Found.
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::uint64_t nodes = 0;
};

/// Downward sweep k = m(g), m(g)-1, ...; the first k with a b-coloring is b(g).
BChromaticResult b_chromatic_number(const Graph& g, const SolveConfig& cfg = {});

struct ChromaticResult {
  SolveStatus status = SolveStatus::Found;
  std::size_t chi = 0;
  std::optional<Coloring> witness;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::uint64_t nodes = 0;
};

/// Exact chromatic number by DSATUR branch and bound.
ChromaticResult chromatic_number(const Graph& g, const SolveConfig& cfg = {});

/// Turn a proper coloring into a b-coloring by repeatedly dissolving a color
/// class with no b-vertex into the other classes. Never uses more colors
/// than the input; used for certified lower bounds.
Coloring reduce_to_b_coloring(const Graph& g, Coloring c);

}  // namespace bchrom
