#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stpart/budget.hpp"
#include "stpart/coloring.hpp"
#include "stpart/constructions.hpp"

namespace stpart::search {

using constructions::MultipartiteWitness;
using core::KSubset;
using model::Coloring;

enum class SearchOutcome { found, none, undetermined };

struct ColorfulSearchResult {
  SearchOutcome outcome = SearchOutcome::none;
  std::optional<MultipartiteWitness> witness;
};

namespace detail {

class ColorfulSearcher {
 public:
  ColorfulSearcher(const Coloring& c, const std::vector<int>& sizes, const SearchBudget& budget)
      : sizes_(sizes), meter_(budget) {
    verts_ = c.descriptor().vertices();
    int count = static_cast<int>(verts_.size());
    if (count > 64) {
      throw std::invalid_argument(
          "search_colorful_multipartite: supports at most 64 Kneser vertices");
    }
    adj_.assign(count, 0);
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < count; ++j) {
        if (i != j && core::disjoint(verts_[i], verts_[j])) adj_[i] |= std::uint64_t{1} << j;
      }
    }
    int max_color = 0;
    vcolor_.reserve(count);
    for (const KSubset& v : verts_) {
      int col = c.color_of(v);
      vcolor_.push_back(col);
      max_color = std::max(max_color, col);
    }
    color_used_.assign(max_color + 1, 0);
    chosen_.assign(sizes_.size(), {});
    all_ = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  }

  ColorfulSearchResult run() {
    ColorfulSearchResult r;
    if (fill(0, 0, 0, all_)) {
      MultipartiteWitness w;
      for (const auto& part : chosen_) {
        std::vector<KSubset> members;
        for (int vi : part) members.push_back(verts_[vi]);
        w.parts.push_back(std::move(members));
      }
      r.outcome = SearchOutcome::found;
      r.witness = std::move(w);
    } else {
      r.outcome = fired_ ? SearchOutcome::undetermined : SearchOutcome::none;
    }
    return r;
  }

 private:
  // Fill slot `slot` of part `part` from vertex index `from` upward; `cross`
  // holds the vertices adjacent to everything placed in earlier parts.
  bool fill(std::size_t part, int slot, int from, std::uint64_t cross) {
    if (part == sizes_.size()) return true;
    if (slot == sizes_[part]) {
      std::uint64_t next = cross;
      for (int vi : chosen_[part]) next &= adj_[vi];
      return fill(part + 1, 0, 0, next);
    }
    std::uint64_t candidates = from >= 64 ? 0 : (cross >> from) << from;
    if (std::popcount(candidates) < sizes_[part] - slot) return false;
    for (std::uint64_t rest = candidates; rest;) {
      int vi = std::countr_zero(rest);
      rest &= rest - 1;
      if (color_used_[vcolor_[vi]]) continue;
      if (meter_.tick()) {
        fired_ = true;
        return false;
      }
      chosen_[part].push_back(vi);
      color_used_[vcolor_[vi]] = 1;
      if (fill(part, slot + 1, vi + 1, cross)) return true;
      color_used_[vcolor_[vi]] = 0;
      chosen_[part].pop_back();
      if (fired_) return false;
    }
    return false;
  }

  std::vector<KSubset> verts_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> vcolor_;
  std::vector<char> color_used_;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> chosen_;
  std::uint64_t all_ = 0;
  bool fired_ = false;
  BudgetMeter meter_;
};

}  // namespace detail

// Exhaustive search for a colorful complete multipartite subgraph with the
// given part sizes: cross-part pairs disjoint, all colors distinct. Parts are
// filled in the given order, candidates in lexicographic KSubset order, so
// the first witness is deterministic.
inline ColorfulSearchResult search_colorful_multipartite(const Coloring& c,
                                                         const std::vector<int>& sizes,
                                                         const SearchBudget& budget = {}) {
  if (c.k() != 2) {
    throw std::invalid_argument("search_colorful_multipartite: defined for k = 2 only");
  }
  model::require_proper(c, "search_colorful_multipartite");
  if (sizes.empty()) {
    throw std::invalid_argument("search_colorful_multipartite: needs at least one part size");
  }
  long long total = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("search_colorful_multipartite: part sizes must be >= 1");
    total += s;
  }
  if (total > c.class_count()) {
    throw std::invalid_argument(
        "search_colorful_multipartite: part sizes sum past the number of color classes");
  }
  return detail::ColorfulSearcher(c, sizes, budget).run();
}

}  // namespace stpart::search
