#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stpart/enumerate.hpp"

namespace stpart::search {

struct TheoremVerdict {
  int n = 0;
  std::string status;  // "pass", "fail", or "inconclusive"
  std::string detail;  // human-readable failure or budget note
  int min_size = -1;   // determined minimum part count, -1 when unknown
  long long optimal_count = 0;
  std::map<int, long long> triangle_histogram;
  long long nodes = 0;
};

// Checks, for one n: the minimum ST-partition size of K_n is n-2, and every
// minimum partition has exactly one triangle part.
inline TheoremVerdict verify_theorem_for(int n, const SearchBudget& budget = {}) {
  if (n < 3) throw std::invalid_argument("verify_theorem_for: requires n >= 3");
  TheoremVerdict v;
  v.n = n;
  SimpleGraph host = core::complete_graph(n);

  int min_size = 0;
  try {
    min_size = min_st_partition_size(host, budget);
  } catch (const BudgetExhausted&) {
    v.status = "inconclusive";
    v.detail = "budget exhausted before the minimum size was determined";
    return v;
  }
  v.min_size = min_size;
  if (min_size != n - 2) {
    v.status = "fail";
    v.detail = "minimum ST-partition size is " + std::to_string(min_size) + ", expected " +
               std::to_string(n - 2);
    return v;
  }

  EnumerationReport report =
      enumerate_st_partitions(host, min_size, budget, [](const STPartition&) { return true; });
  v.optimal_count = report.partitions_found;
  v.triangle_histogram = report.triangle_histogram;
  v.nodes = report.nodes;
  if (!report.exhausted) {
    v.status = "inconclusive";
    v.detail = "budget exhausted while enumerating minimum partitions";
    return v;
  }
  if (v.triangle_histogram.size() != 1 || !v.triangle_histogram.count(1)) {
    v.status = "fail";
    std::string support;
    for (const auto& [t, c] : v.triangle_histogram) {
      support += (support.empty() ? "" : ",") + std::to_string(t);
    }
    v.detail = "triangle histogram support is {" + support + "}, expected {1}";
    return v;
  }
  v.status = "pass";
  return v;
}

inline std::vector<TheoremVerdict> verify_theorem(int n_lo, int n_hi,
                                                  const SearchBudget& budget = {}) {
  if (n_lo < 3 || n_lo > n_hi) {
    throw std::invalid_argument("verify_theorem: requires 3 <= n_lo <= n_hi");
  }
  std::vector<TheoremVerdict> out;
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(verify_theorem_for(n, budget));
  return out;
}

struct SubgoalVerdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The three arithmetic facts the main argument leans on, checked directly.
inline std::vector<SubgoalVerdict> verify_case_subgoals() {
  std::vector<SubgoalVerdict> out;

  {
    SubgoalVerdict v{"k6-no-disjoint-triangle-pair", true,
                     "no 4-part partition of K_6 holds two vertex-disjoint triangles"};
    enumerate_st_partitions(core::complete_graph(6), 4, {}, [&](const STPartition& p) {
      std::vector<std::uint64_t> tri_masks;
      for (const model::STPart& part : p.parts) {
        if (!part.is_triangle()) continue;
        std::uint64_t m = 0;
        for (int x : part.triangle().vertices) m |= std::uint64_t{1} << (x - 1);
        tri_masks.push_back(m);
      }
      for (std::size_t i = 0; i < tri_masks.size(); ++i) {
        for (std::size_t j = i + 1; j < tri_masks.size(); ++j) {
          if ((tri_masks[i] & tri_masks[j]) == 0) {
            v.pass = false;
            v.detail = "found a 4-part partition of K_6 with two vertex-disjoint triangles";
            return false;
          }
        }
      }
      return true;
    });
    out.push_back(v);
  }

  {
    SubgoalVerdict v{"k5-no-sharing-triangle-pair", true,
                     "no 3-part partition of K_5 holds two triangles sharing a vertex"};
    enumerate_st_partitions(core::complete_graph(5), 3, {}, [&](const STPartition& p) {
      std::vector<std::uint64_t> tri_masks;
      for (const model::STPart& part : p.parts) {
        if (!part.is_triangle()) continue;
        std::uint64_t m = 0;
        for (int x : part.triangle().vertices) m |= std::uint64_t{1} << (x - 1);
        tri_masks.push_back(m);
      }
      for (std::size_t i = 0; i < tri_masks.size(); ++i) {
        for (std::size_t j = i + 1; j < tri_masks.size(); ++j) {
          if ((tri_masks[i] & tri_masks[j]) != 0) {
            v.pass = false;
            v.detail = "found a 3-part partition of K_5 with two triangles sharing a vertex";
            return false;
          }
        }
      }
      return true;
    });
    out.push_back(v);
  }

  {
    // 3(n-2) = n(n-1)/2 is quadratic, so at most two integers solve it; a
    // bounded sweep that finds two is conclusive for all integers
    std::set<int> solutions;
    for (int n = -1000; n <= 1000; ++n) {
      if (6 * (n - 2) == n * (n - 1)) solutions.insert(n);
    }
    SubgoalVerdict v{"triangle-count-equation", solutions == std::set<int>{3, 4}, ""};
    std::string list;
    for (int s : solutions) list += (list.empty() ? "" : ",") + std::to_string(s);
    v.detail = "integer solutions of 3(n-2) = n(n-1)/2: {" + list + "}";
    out.push_back(v);
  }

  return out;
}

}  // namespace stpart::search
