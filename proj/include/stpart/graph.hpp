#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stpart/ksubset.hpp"

namespace stpart::core {

using Edge = std::pair<int, int>;  // always stored with first < second

// Finite simple graph on labels 1..n. Edges are kept in lexicographic order;
// per-vertex adjacency is a 64-bit mask, which caps n at max_label.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  SimpleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    if (n_ > max_label) {
      throw std::invalid_argument("SimpleGraph: n exceeds " + std::to_string(max_label));
    }
    for (auto& [u, v] : edges_) {
      if (u >= v) throw std::invalid_argument("SimpleGraph: edge endpoints must satisfy u < v");
      if (u < 1 || v > n_) throw std::invalid_argument("SimpleGraph: edge endpoint out of 1..n");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("SimpleGraph: duplicate edge");
    }
    adj_.assign(n_ + 1, 0);
    for (auto& [u, v] : edges_) {
      adj_[u] |= std::uint64_t{1} << (v - 1);
      adj_[v] |= std::uint64_t{1} << (u - 1);
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
    return (adj_[u] >> (v - 1)) & 1;
  }

  // Index of {u,v} in lexicographic edge order, or -1.
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (!has_edge(u, v)) return -1;
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    return static_cast<int>(it - edges_.begin());
  }

  std::uint64_t adjacency_mask(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  bool is_complete() const {
    return static_cast<std::uint64_t>(edge_count()) == binomial(n_, 2);
  }

  // Connectivity over the whole label set; isolated vertices disconnect.
  bool connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1;  // vertex 1
    std::uint64_t frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 1; v <= n_; ++v) {
        if ((frontier >> (v - 1)) & 1) next |= adj_[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

inline SimpleGraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(binomial(n, 2)));
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return SimpleGraph(n, std::move(edges));
}

// Vertices are the edges of h in lexicographic order (labels 1..m); two are
// adjacent iff the corresponding edges of h share no endpoint. For h = K_n
// this is KG(n,2).
inline SimpleGraph complement_of_line_graph(const SimpleGraph& h) {
  int m = h.edge_count();
  if (m > max_label) {
    throw std::invalid_argument("complement_of_line_graph: host has more than " +
                                std::to_string(max_label) + " edges");
  }
  std::vector<Edge> out;
  const auto& he = h.edges();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = he[i];
      auto [c, d] = he[j];
      if (a != c && a != d && b != c && b != d) out.push_back({i + 1, j + 1});
    }
  }
  return SimpleGraph(m, std::move(out));
}

// Vertices are the k-subsets of {1..n} in lexicographic order (labels
// 1..C(n,k)); adjacency is disjointness. Generalizes complement_of_line_graph
// beyond k = 2.
inline SimpleGraph kneser_graph(const KneserDescriptor& d) {
  auto verts = d.vertices();
  if (verts.size() > static_cast<std::size_t>(max_label)) {
    throw std::invalid_argument("kneser_graph: more than " + std::to_string(max_label) +
                                " vertices");
  }
  int m = static_cast<int>(verts.size());
  std::vector<Edge> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (disjoint(verts[i], verts[j])) out.push_back({i + 1, j + 1});
  return SimpleGraph(m, std::move(out));
}

// Text format: first line "n <count>", one "u v" line per edge with u < v;
// blank lines and lines starting with '#' are ignored; duplicates rejected.
inline SimpleGraph read_graph(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (!header_seen) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n") {
        throw std::invalid_argument("graph file: line " + std::to_string(lineno) +
                                    ": expected header 'n <count>'");
      }
      header_seen = true;
      continue;
    }
    int u = 0, v = 0;
    if (!(ls >> u >> v)) {
      throw std::invalid_argument("graph file: line " + std::to_string(lineno) +
                                  ": expected 'u v'");
    }
    if (!(1 <= u && u < v && v <= n)) {
      throw std::invalid_argument("graph file: line " + std::to_string(lineno) +
                                  ": need 1 <= u < v <= n");
    }
    edges.push_back({u, v});
  }
  if (!header_seen) throw std::invalid_argument("graph file: missing 'n <count>' header");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] == edges[j]) throw std::invalid_argument("graph file: duplicate edge");
    }
  }
  return SimpleGraph(n, std::move(edges));
}

inline void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace stpart::core
