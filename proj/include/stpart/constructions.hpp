#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stpart/coloring.hpp"

namespace stpart::constructions {

using core::KneserDescriptor;
using core::KSubset;
using model::Coloring;
using model::STPartition;
using model::Triangle;

// Vertex parts of a complete multipartite subgraph of KG(n,2). A witness is
// colorful under a coloring when verify_colorful_multipartite accepts it.
// `mirrored` marks the swapped bipartite construction used when the side
// that normally carries the triangle edge was requested empty.
struct MultipartiteWitness {
  std::vector<std::vector<KSubset>> parts;
  bool mirrored = false;
};

// Classes 1..n-2k+1 collect the k-subsets with that minimum element; the
// last class takes every k-subset of the final 2k-1 labels.
inline Coloring standard_optimal_coloring(int n, int k) {
  if (k < 1 || n < 2 * k - 1) {
    throw std::invalid_argument("standard_optimal_coloring: requires n >= 2k-1 >= 1");
  }
  int last = n - 2 * k + 2;
  std::map<KSubset, int> assignment;
  for (const KSubset& v : core::k_subsets(n, k)) {
    assignment[v] = std::min(v.elements().front(), last);
  }
  return Coloring(KneserDescriptor(n, k), std::move(assignment));
}

inline int remark_raw_color(int i, int j) {
  if (i >= j) throw std::invalid_argument("remark_raw_color: requires i < j");
  if (j <= 3) return 3;
  if (i <= 3) return j;
  return i;
}

struct RemarkColoring {
  Coloring coloring;                  // colors shifted down to 1..n-2
  std::map<KSubset, int> raw_colors;  // the unshifted values in {3..n}
};

inline RemarkColoring remark_coloring(int n) {
  if (n < 3) throw std::invalid_argument("remark_coloring: requires n >= 3");
  std::map<KSubset, int> raw;
  std::map<KSubset, int> shifted;
  for (const KSubset& v : core::k_subsets(n, 2)) {
    int c = remark_raw_color(v.elements()[0], v.elements()[1]);
    raw[v] = c;
    shifted[v] = c - 2;
  }
  return {Coloring(KneserDescriptor(n, 2), std::move(shifted)), std::move(raw)};
}

namespace detail {

inline KSubset pair_of(int u, int v) { return KSubset{std::min(u, v), std::max(u, v)}; }

inline int require_optimal(const STPartition& p, const char* who) {
  if (!p.host.is_complete()) {
    throw std::invalid_argument(std::string(who) + ": host must be a complete graph");
  }
  int n = p.host.vertex_count();
  if (n < 3) throw std::invalid_argument(std::string(who) + ": requires n >= 3");
  model::ValidationReport vr = model::validate_partition(p);
  if (!vr.ok()) {
    throw std::invalid_argument(std::string(who) + ": invalid partition, " +
                                vr.faults.front().describe());
  }
  if (static_cast<int>(p.parts.size()) != n - 2) {
    throw std::invalid_argument(std::string(who) + ": partition is not optimal (" +
                                std::to_string(p.parts.size()) + " parts, expected " +
                                std::to_string(n - 2) + ")");
  }
  return n;
}

inline Triangle locate_triangle(const STPartition& p, const char* who) {
  const Triangle* found = nullptr;
  for (const model::STPart& part : p.parts) {
    if (!part.is_triangle()) continue;
    if (found) {
      throw std::invalid_argument(std::string(who) + ": partition has more than one triangle");
    }
    found = &part.triangle();
  }
  if (!found) {
    throw std::invalid_argument(std::string(who) + ": partition has no triangle part");
  }
  return *found;
}

}  // namespace detail

// Sides built from the partition's triangle {a,b,c} and the remaining
// vertices x_1 < ... < x_{n-3}: A pairs a with the first l of them, B pairs
// b with the rest and adds the triangle edge {b,c}. When m = 0 that edge has
// no side to live on, so the roles of A and B swap and the witness says so.
inline MultipartiteWitness extract_colorful_bipartite(const STPartition& p, int l, int m) {
  const char* who = "extract_colorful_bipartite";
  int n = detail::require_optimal(p, who);
  if (l < 0 || m < 0 || l + m != n - 2) {
    throw std::invalid_argument(std::string(who) + ": requires l, m >= 0 with l + m = n - 2");
  }
  Triangle t = detail::locate_triangle(p, who);
  auto [a, b, c] = t.vertices;
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != a && v != b && v != c) rest.push_back(v);
  }

  MultipartiteWitness w;
  w.parts.assign(2, {});
  w.mirrored = (m == 0 && l > 0);
  int star_count = w.mirrored ? m : l;  // pairs with a
  std::vector<KSubset>& star_side = w.parts[0];
  std::vector<KSubset>& mixed_side = w.parts[w.mirrored ? 0 : 1];
  for (int i = 0; i < star_count; ++i) star_side.push_back(detail::pair_of(a, rest[i]));
  for (int i = star_count; i < n - 3; ++i) mixed_side.push_back(detail::pair_of(b, rest[i]));
  mixed_side.push_back(detail::pair_of(b, c));
  return w;
}

inline MultipartiteWitness extract_colorful_tripartite(const STPartition& p, int k, int l, int m) {
  const char* who = "extract_colorful_tripartite";
  int n = detail::require_optimal(p, who);
  if (n < 6) throw std::invalid_argument(std::string(who) + ": requires n >= 6");
  if (k < 1 || l < 1 || m < 1 || k + l + m != n - 3) {
    throw std::invalid_argument(std::string(who) + ": requires k, l, m >= 1 with k + l + m = n - 3");
  }
  Triangle t = detail::locate_triangle(p, who);
  auto [a, b, c] = t.vertices;
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != a && v != b && v != c) rest.push_back(v);
  }

  MultipartiteWitness w;
  w.parts.assign(3, {});
  for (int i = 0; i < k; ++i) w.parts[0].push_back(detail::pair_of(a, rest[i]));
  for (int i = k; i < k + l; ++i) w.parts[1].push_back(detail::pair_of(b, rest[i]));
  for (int i = k + l; i < n - 3; ++i) w.parts[2].push_back(detail::pair_of(c, rest[i]));
  return w;
}

struct WitnessCheck {
  bool ok = true;
  std::string violation;  // first failure, empty when ok
};

inline WitnessCheck verify_colorful_multipartite(const Coloring& c, const MultipartiteWitness& w) {
  std::map<int, KSubset> color_seen;
  for (const auto& part : w.parts) {
    for (const KSubset& v : part) {
      int col = c.color_of(v);
      auto [it, fresh] = color_seen.emplace(col, v);
      if (!fresh) {
        return {false, "color collision: {" + it->second.key() + "} and {" + v.key() +
                           "} both have color " + std::to_string(col)};
      }
    }
  }
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < w.parts.size(); ++j) {
      for (const KSubset& u : w.parts[i]) {
        for (const KSubset& v : w.parts[j]) {
          if (!core::kneser_adjacent(u, v)) {
            return {false, "not adjacent: {" + u.key() + "} and {" + v.key() + "}"};
          }
        }
      }
    }
  }
  return {};
}

struct CycleCheck {
  bool ok = true;
  std::vector<int> cycle;  // closed vertex sequence of a colorful cycle, when one exists
};

namespace detail {

struct CycleSearch {
  const Coloring& c;
  int n;
  std::vector<int> path;
  std::vector<char> in_path;
  std::vector<char> color_used;

  explicit CycleSearch(const Coloring& coloring) : c(coloring), n(coloring.n()) {
    in_path.assign(n + 1, 0);
    int max_color = 0;
    for (const auto& [v, col] : c.assignment()) max_color = std::max(max_color, col);
    color_used.assign(max_color + 1, 0);
  }

  int edge_color(int u, int v) const { return c.color_of(pair_of(u, v)); }

  // Simple cycles with the smallest vertex first and second vertex smaller
  // than the last, so each cycle is tried once per direction class.
  bool extend(std::vector<int>& out) {
    int s = path.front();
    int u = path.back();
    for (int w = s + 1; w <= n; ++w) {
      if (in_path[w]) continue;
      int col = edge_color(u, w);
      if (color_used[col]) continue;
      path.push_back(w);
      in_path[w] = 1;
      color_used[col] = 1;
      if (path.size() >= 3 && path[1] < w) {
        int close = edge_color(w, s);
        if (!color_used[close]) {
          out = path;
          return true;
        }
      }
      if (extend(out)) return true;
      color_used[col] = 0;
      in_path[w] = 0;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace detail

// Searches K_n for a cycle whose edges all have distinct colors under c.
inline CycleCheck no_colorful_cycle_certificate(const Coloring& c) {
  if (c.k() != 2) {
    throw std::invalid_argument("no_colorful_cycle_certificate: defined for k = 2 only");
  }
  model::require_proper(c, "no_colorful_cycle_certificate");
  detail::CycleSearch search(c);
  for (int s = 1; s <= c.n() - 2; ++s) {
    search.path.assign(1, s);
    search.in_path[s] = 1;
    std::vector<int> found;
    if (search.extend(found)) return {false, std::move(found)};
    search.in_path[s] = 0;
  }
  return {};
}

}  // namespace stpart::constructions
