#include "bchrom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "bchrom/metrics.hpp"

namespace bchrom {

ColoringReport verify_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.order()) {
    throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) + " of " +
                                std::to_string(g.order()) + " vertices");
  }
  for (VertexId u = 0; u < g.order(); ++u) {
    if (c.colors[u] < 1 || c.colors[u] > c.k) {
      throw std::invalid_argument("vertex " + std::to_string(u) + " has no color in 1.." +
                                  std::to_string(c.k));
    }
  }
  ColoringReport rep;
  rep.proper = true;
  for (const auto& e : g.edges()) {
    if (c.colors[e.u] == c.colors[e.v]) {
      rep.proper = false;
      break;
    }
  }
  std::vector<bool> realized(c.k + 1, false);
  std::vector<bool> seen(c.k + 1);
  for (VertexId u = 0; u < g.order(); ++u) {
    std::fill(seen.begin(), seen.end(), false);
    seen[c.colors[u]] = true;
    std::size_t distinct = 1;
    for (VertexId w : g.neighbors(u)) {
      if (!seen[c.colors[w]]) {
        seen[c.colors[w]] = true;
        ++distinct;
      }
    }
    if (distinct == c.k) realized[c.colors[u]] = true;
  }
  for (std::uint32_t i = 1; i <= c.k; ++i) {
    if (realized[i]) rep.realized.push_back(i);
  }
  rep.is_b_coloring = rep.proper && rep.realized.size() == c.k;
  return rep;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kTimeCheckInterval = 4096;

class Budget {
 public:
  explicit Budget(const SolveConfig& cfg) : cfg_(cfg), start_(Clock::now()) {}

  // Counts one expansion; false once either budget is spent.
  bool tick() {
    if (exceeded_) return false;
    ++nodes_;
    if (nodes_ > cfg_.node_budget) {
      exceeded_ = true;
    } else if (nodes_ % kTimeCheckInterval == 0) {
      std::chrono::duration<double> elapsed = Clock::now() - start_;
      exceeded_ = elapsed.count() > cfg_.time_budget_seconds;
    }
    return !exceeded_;
  }
  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const SolveConfig& cfg_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

// Extends a fixed choice of b-vertices to a full b-coloring.
class BExtension {
 public:
  BExtension(const Graph& g, std::size_t k, Budget& budget)
      : g_(g),
        k_(k),
        full_(k == 64 ? ~Mask{0} : (Mask{1} << k) - 1),
        budget_(budget),
        color_(g.order(), -1),
        nb_count_(g.order() * k, 0),
        forbidden_(g.order(), 0),
        watchers_(g.order()) {}

  // Colors b[i] with color i and searches; true iff a b-coloring was found.
  bool run(const std::vector<VertexId>& b) {
    b_ = b;
    const std::size_t kk = b.size();
    seen_count_.assign(kk * k_, 0);
    seen_.assign(kk, 0);
    uncolored_.assign(kk, 0);
    for (auto& w : watchers_) w.clear();
    for (std::size_t i = 0; i < kk; ++i) {
      watchers_[b[i]].push_back(static_cast<std::uint32_t>(i));
      for (VertexId w : g_.neighbors(b[i])) watchers_[w].push_back(static_cast<std::uint32_t>(i));
      uncolored_[i] = g_.degree(b[i]) + 1;
    }
    std::size_t placed = 0;
    bool ok = true;
    for (std::size_t i = 0; i < kk; ++i) {
      if ((forbidden_[b[i]] >> i) & 1U) {
        ok = false;
        break;
      }
      assign(b[i], static_cast<int>(i));
      ++placed;
    }
    ok = ok && feasible_all();
    if (ok) ok = search(g_.order() - kk);
    if (!ok) {
      for (std::size_t i = placed; i-- > 0;) unassign(b[i]);
    }
    return ok;
  }

  Coloring coloring() const {
    Coloring c;
    c.k = k_;
    c.colors.resize(g_.order());
    for (VertexId u = 0; u < g_.order(); ++u) c.colors[u] = static_cast<std::uint32_t>(color_[u] + 1);
    return c;
  }

 private:
  void assign(VertexId v, int c) {
    color_[v] = c;
    for (VertexId w : g_.neighbors(v)) {
      if (nb_count_[w * k_ + c]++ == 0) forbidden_[w] |= Mask{1} << c;
    }
    for (auto i : watchers_[v]) {
      if (seen_count_[i * k_ + c]++ == 0) seen_[i] |= Mask{1} << c;
      --uncolored_[i];
    }
  }

  void unassign(VertexId v) {
    const int c = color_[v];
    color_[v] = -1;
    for (VertexId w : g_.neighbors(v)) {
      if (--nb_count_[w * k_ + c] == 0) forbidden_[w] &= ~(Mask{1} << c);
    }
    for (auto i : watchers_[v]) {
      if (--seen_count_[i * k_ + c] == 0) seen_[i] &= ~(Mask{1} << c);
      ++uncolored_[i];
    }
  }

  Mask domain(VertexId v) const { return full_ & ~forbidden_[v]; }

  // b-vertex i can still see every color.
  bool demand_ok(std::size_t i) const {
    const Mask missing = full_ & ~seen_[i];
    if (missing == 0) return true;
    if (static_cast<std::size_t>(std::popcount(missing)) > uncolored_[i]) return false;
    Mask offer = 0;
    for (VertexId w : g_.neighbors(b_[i])) {
      if (color_[w] < 0) offer |= domain(w);
    }
    return (missing & ~offer) == 0;
  }

  bool feasible_all() const {
    for (std::size_t i = 0; i < b_.size(); ++i) {
      if (!demand_ok(i)) return false;
    }
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (color_[v] < 0 && domain(v) == 0) return false;
    }
    return true;
  }

  bool feasible_after(VertexId v) const {
    for (VertexId w : g_.neighbors(v)) {
      if (color_[w] < 0 && domain(w) == 0) return false;
    }
    for (std::size_t i = 0; i < b_.size(); ++i) {
      if (!demand_ok(i)) return false;
    }
    return true;
  }

  // Uncolored neighbors of unsatisfied b-vertices first, smallest domain first.
  VertexId pick() const {
    VertexId best = UINT32_MAX;
    int best_pressure = -1;
    int best_dom = 65;
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (color_[v] >= 0) continue;
      int pressure = 0;
      for (auto i : watchers_[v]) pressure += (seen_[i] != full_) ? 1 : 0;
      const int dom = std::popcount(domain(v));
      const bool better = (pressure > 0) != (best_pressure > 0)
                              ? pressure > 0
                              : (dom != best_dom ? dom < best_dom : pressure > best_pressure);
      if (best == UINT32_MAX || better) {
        best = v;
        best_pressure = pressure;
        best_dom = dom;
      }
    }
    return best;
  }

  bool search(std::size_t remaining) {
    if (remaining == 0) return true;
    const VertexId v = pick();
    Mask dom = domain(v);

    // colors missing around more watching b-vertices go first
    std::vector<std::pair<int, int>> order;
    for (Mask rest = dom; rest != 0; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      int want = 0;
      for (auto i : watchers_[v]) want += ((seen_[i] >> c) & 1U) ? 0 : 1;
      order.emplace_back(-want, c);
    }
    std::sort(order.begin(), order.end());

    for (auto [neg_want, c] : order) {
      if (!budget_.tick()) return false;
      assign(v, c);
      if (feasible_after(v) && search(remaining - 1)) return true;
      unassign(v);
      if (budget_.exceeded()) return false;
    }
    return false;
  }

  const Graph& g_;
  const std::size_t k_;
  const Mask full_;
  Budget& budget_;
  std::vector<int> color_;
  std::vector<std::uint32_t> nb_count_;  // [v * k + c]: colored neighbors of v with color c
  std::vector<Mask> forbidden_;
  std::vector<std::vector<std::uint32_t>> watchers_;  // b-vertex indices whose N[] contains v
  std::vector<VertexId> b_;
  std::vector<std::uint32_t> seen_count_;  // [i * k + c] over N[b_i]
  std::vector<Mask> seen_;
  std::vector<std::size_t> uncolored_;
};

// Plain DSATUR greedy: returns 0-based colors.
std::vector<int> dsatur_greedy(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<std::vector<bool>> sat(n);
  std::vector<std::size_t> sat_size(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId v = UINT32_MAX;
    for (VertexId u = 0; u < n; ++u) {
      if (color[u] >= 0) continue;
      if (v == UINT32_MAX || sat_size[u] > sat_size[v] ||
          (sat_size[u] == sat_size[v] && g.degree(u) > g.degree(v))) {
        v = u;
      }
    }
    int c = 0;
    while (static_cast<std::size_t>(c) < sat[v].size() && sat[v][c]) ++c;
    color[v] = c;
    for (VertexId w : g.neighbors(v)) {
      if (sat[w].size() <= static_cast<std::size_t>(c)) sat[w].resize(c + 1, false);
      if (!sat[w][c]) {
        sat[w][c] = true;
        ++sat_size[w];
      }
    }
  }
  return color;
}

std::size_t greedy_clique_size(const Graph& g) {
  std::size_t best = g.order() > 0 ? 1 : 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    std::vector<VertexId> cand(g.neighbors(s).begin(), g.neighbors(s).end());
    std::sort(cand.begin(), cand.end(), [&](VertexId a, VertexId b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<VertexId> clique{s};
    for (VertexId c : cand) {
      if (std::all_of(clique.begin(), clique.end(), [&](VertexId q) { return g.has_edge(q, c); })) {
        clique.push_back(c);
      }
    }
    best = std::max(best, clique.size());
  }
  return best;
}

Coloring to_coloring(const std::vector<int>& zero_based) {
  Coloring c;
  int top = -1;
  for (int x : zero_based) top = std::max(top, x);
  c.k = static_cast<std::size_t>(top + 1);
  c.colors.reserve(zero_based.size());
  for (int x : zero_based) c.colors.push_back(static_cast<std::uint32_t>(x + 1));
  return c;
}

class DsaturBnB {
 public:
  DsaturBnB(const Graph& g, Budget& budget, std::size_t lower, std::vector<int> incumbent)
      : g_(g), budget_(budget), lower_(lower), best_(std::move(incumbent)), color_(g.order(), -1) {
    best_k_ = 0;
    for (int c : best_) best_k_ = std::max(best_k_, static_cast<std::size_t>(c + 1));
    width_ = best_k_ + 1;
    nb_count_.assign(g.order() * width_, 0);
    sat_size_.assign(g.order(), 0);
  }

  void run() {
    if (best_k_ > lower_) search(0, 0);
  }
  std::size_t best_k() const { return best_k_; }
  const std::vector<int>& best() const { return best_; }

 private:
  void search(std::size_t colored, std::size_t used) {
    if (best_k_ <= lower_ || budget_.exceeded()) return;
    if (colored == g_.order()) {
      if (used < best_k_) {
        best_k_ = used;
        best_ = color_;
      }
      return;
    }
    VertexId v = UINT32_MAX;
    for (VertexId u = 0; u < g_.order(); ++u) {
      if (color_[u] >= 0) continue;
      if (v == UINT32_MAX || sat_size_[u] > sat_size_[v] ||
          (sat_size_[u] == sat_size_[v] && g_.degree(u) > g_.degree(v))) {
        v = u;
      }
    }
    const std::size_t width = width_;
    // a new color is only worth opening while it beats the incumbent
    const std::size_t limit = std::min(used + 1, best_k_ - 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (nb_count_[v * width + c] > 0) continue;
      if (!budget_.tick()) return;
      set(v, static_cast<int>(c), width);
      search(colored + 1, std::max(used, c + 1));
      unset(v, width);
      if (best_k_ <= lower_ || budget_.exceeded()) return;
    }
  }

  void set(VertexId v, int c, std::size_t width) {
    color_[v] = c;
    for (VertexId w : g_.neighbors(v)) {
      if (nb_count_[w * width + c]++ == 0) ++sat_size_[w];
    }
  }
  void unset(VertexId v, std::size_t width) {
    const int c = color_[v];
    color_[v] = -1;
    for (VertexId w : g_.neighbors(v)) {
      if (--nb_count_[w * width + c] == 0) --sat_size_[w];
    }
  }

  const Graph& g_;
  Budget& budget_;
  std::size_t lower_;
  std::vector<int> best_;
  std::size_t best_k_ = 0;
  std::size_t width_ = 0;  // stride of nb_count_, fixed by the initial incumbent
  std::vector<int> color_;
  std::vector<std::uint32_t> nb_count_;
  std::vector<std::size_t> sat_size_;
};

}  // namespace

SolveOutcome b_decision(const Graph& g, std::size_t k, const SolveConfig& cfg) {
  if (k < 1 || k > g.order()) throw std::invalid_argument("b_decision needs 1 <= k <= n");
  if (k > 64) throw std::invalid_argument("b_decision supports at most 64 colors");

  SolveOutcome out;
  std::vector<VertexId> cand;
  for (VertexId u = 0; u < g.order(); ++u) {
    if (g.degree(u) + 1 >= k) cand.push_back(u);
  }
  if (cand.size() < k) return out;

  Budget budget(cfg);
  BExtension ext(g, k, budget);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<VertexId> chosen(k);
  while (true) {
    if (!budget.tick()) break;
    for (std::size_t i = 0; i < k; ++i) chosen[i] = cand[idx[i]];
    if (ext.run(chosen)) {
      out.status = SolveStatus::Found;
      out.witness = ext.coloring();
      out.nodes = budget.nodes();
      return out;
    }
    if (budget.exceeded()) break;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == cand.size() - k + i - 1) --i;
    if (i == 0) {
      out.nodes = budget.nodes();
      return out;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  out.status = SolveStatus::BudgetExceeded;
  out.nodes = budget.nodes();
  return out;
}

Coloring reduce_to_b_coloring(const Graph& g, Coloring c) {
  while (true) {
    auto rep = verify_coloring(g, c);
    if (!rep.proper) throw std::invalid_argument("reduce_to_b_coloring needs a proper coloring");
    if (rep.is_b_coloring) return c;
    // lowest color without a b-vertex
    std::uint32_t dead = 1;
    for (std::uint32_t r : rep.realized) {
      if (r != dead) break;
      ++dead;
    }
    std::vector<bool> present(c.k + 1);
    for (VertexId u = 0; u < g.order(); ++u) {
      if (c.colors[u] != dead) continue;
      std::fill(present.begin(), present.end(), false);
      for (VertexId w : g.neighbors(u)) present[c.colors[w]] = true;
      std::uint32_t j = 1;
      while (j == dead || present[j]) ++j;
      // the class is independent, so recoloring u leaves its classmates' neighborhoods alone
      c.colors[u] = j;
    }
    for (auto& x : c.colors) {
      if (x > dead) --x;
    }
    --c.k;
  }
}

BChromaticResult b_chromatic_number(const Graph& g, const SolveConfig& cfg) {
  BChromaticResult res;
  if (g.order() == 0) return res;
  const std::size_t m = m_degree(g);

  // certified lower bound from a reduced greedy coloring
  Coloring lower_witness = reduce_to_b_coloring(g, to_coloring(dsatur_greedy(g)));
  res.lower = lower_witness.k;
  res.upper = m;

  SolveConfig remaining = cfg;
  const auto start = Clock::now();
  for (std::size_t k = m; k >= 1; --k) {
    if (k == res.lower) {
      res.status = SolveStatus::Found;
      res.b = k;
      res.witness = lower_witness;
      res.upper = k;
      return res;
    }
    std::chrono::duration<double> spent = Clock::now() - start;
    remaining.time_budget_seconds = cfg.time_budget_seconds - spent.count();
    remaining.node_budget = cfg.node_budget > res.nodes ? cfg.node_budget - res.nodes : 0;
    auto out = b_decision(g, k, remaining);
    res.nodes += out.nodes;
    if (out.status == SolveStatus::Found) {
      res.status = SolveStatus::Found;
      res.b = k;
      res.lower = res.upper = k;
      res.witness = std::move(out.witness);
      return res;
    }
    if (out.status == SolveStatus::BudgetExceeded) {
      res.status = SolveStatus::BudgetExceeded;
      res.upper = k;
      res.witness = lower_witness;
      return res;
    }
    res.upper = k - 1;
  }
  // unreachable: k = lower >= 1 always succeeds above
  throw std::logic_error("b-chromatic sweep fell through");
}

ChromaticResult chromatic_number(const Graph& g, const SolveConfig& cfg) {
  ChromaticResult res;
  if (g.order() == 0) return res;
  auto greedy = dsatur_greedy(g);
  res.lower = greedy_clique_size(g);
  Budget budget(cfg);
  DsaturBnB bnb(g, budget, res.lower, greedy);
  bnb.run();
  res.nodes = budget.nodes();
  res.upper = bnb.best_k();
  res.witness = to_coloring(bnb.best());
  if (budget.exceeded() && res.upper > res.lower) {
    res.status = SolveStatus::BudgetExceeded;
    return res;
  }
  res.status = SolveStatus::Found;
  res.chi = res.upper;
  res.lower = res.upper;
  return res;
}

}  // namespace bchrom
