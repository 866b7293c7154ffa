#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stpart/budget.hpp"
#include "stpart/graph.hpp"

namespace stpart::search {

using core::SimpleGraph;

namespace detail {

class ChromaticSolver {
 public:
  ChromaticSolver(const SimpleGraph& g, const SearchBudget& budget)
      : n_(g.vertex_count()), meter_(budget) {
    // adjacency_mask(v) keeps neighbor u at bit u-1, which is already the
    // 0-indexed numbering used here
    adj_.assign(n_, 0);
    for (int v = 1; v <= n_; ++v) adj_[v - 1] = g.adjacency_mask(v);
  }

  int solve() {
    std::vector<int> clique = greedy_clique();
    lower_ = static_cast<int>(clique.size());
    color_.assign(n_, 0);
    best_ = greedy_upper_bound();
    if (lower_ == best_) return best_;

    // seed the clique with fixed colors; any coloring can be renamed to agree
    color_.assign(n_, 0);
    int used = 0;
    for (int v : clique) color_[v] = ++used;
    recurse(n_ - static_cast<int>(clique.size()), used);
    if (budget_fired_) throw BudgetExhausted("exact_chromatic_number: budget exhausted");
    return best_;
  }

 private:
  // largest-first greedy clique, deterministic
  std::vector<int> greedy_clique() const {
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = std::popcount(adj_[a]), db = std::popcount(adj_[b]);
      return da != db ? da > db : a < b;
    });
    std::vector<int> clique;
    std::uint64_t common = ~std::uint64_t{0};
    for (int v : order) {
      if (clique.empty() || (common >> v) & 1) {
        clique.push_back(v);
        common &= adj_[v];
      }
    }
    return clique;
  }

  // DSATUR run to completion, no backtracking
  int greedy_upper_bound() {
    std::vector<std::uint64_t> neighbor_colors(n_, 0);
    std::uint64_t uncolored = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      int pick = -1, pick_sat = -1, pick_deg = -1;
      for (std::uint64_t rest = uncolored; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int sat = std::popcount(neighbor_colors[v]);
        int deg = std::popcount(adj_[v]);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
          pick = v;
          pick_sat = sat;
          pick_deg = deg;
        }
      }
      int c = std::countr_zero(~neighbor_colors[pick]) + 1;
      used = std::max(used, c);
      uncolored &= ~(std::uint64_t{1} << pick);
      for (std::uint64_t rest = adj_[pick]; rest;) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        neighbor_colors[u] |= std::uint64_t{1} << (c - 1);
      }
    }
    return used;
  }

  std::uint64_t colors_around(int v) const {
    std::uint64_t mask = 0;
    for (std::uint64_t rest = adj_[v]; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (color_[u]) mask |= std::uint64_t{1} << (color_[u] - 1);
    }
    return mask;
  }

  void recurse(int uncolored, int used) {
    if (budget_fired_) return;
    if (meter_.tick()) {
      budget_fired_ = true;
      return;
    }
    if (used >= best_) return;
    if (uncolored == 0) {
      best_ = used;
      return;
    }
    // branch on the most saturated uncolored vertex
    int pick = -1, pick_sat = -1, pick_deg = -1;
    std::uint64_t pick_mask = 0;
    for (int v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      std::uint64_t around = colors_around(v);
      int sat = std::popcount(around);
      int deg = std::popcount(adj_[v]);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        pick_mask = around;
      }
    }
    int new_color_cap = std::min(used + 1, best_ - 1);
    for (int c = 1; c <= new_color_cap; ++c) {
      if ((pick_mask >> (c - 1)) & 1) continue;
      color_[pick] = c;
      recurse(uncolored - 1, std::max(used, c));
      color_[pick] = 0;
      if (budget_fired_ || best_ == lower_) return;
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> color_;
  int lower_ = 1;
  int best_ = 0;
  bool budget_fired_ = false;
  BudgetMeter meter_;
};

}  // namespace detail

// Exact chromatic number by branch and bound: greedy clique lower bound,
// DSATUR upper bound, saturation-ordered branching. Deterministic; throws
// BudgetExhausted instead of ever returning a wrong value.
inline int exact_chromatic_number(const SimpleGraph& g, const SearchBudget& budget = {}) {
  if (g.vertex_count() < 1) {
    throw std::invalid_argument("exact_chromatic_number: needs at least one vertex");
  }
  if (g.edge_count() == 0) return 1;
  return detail::ChromaticSolver(g, budget).solve();
}

}  // namespace stpart::search
