#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "stpart/graph.hpp"

namespace stpart::model {

using core::Edge;
using core::SimpleGraph;

// A star: edges {center,l} for each leaf l. A single edge is a star with a
// designated center.
struct Star {
  int center = 0;
  std::vector<int> leaves;  // sorted, never contains center, never empty

  Star(int center_, std::vector<int> leaves_) : center(center_), leaves(std::move(leaves_)) {
    if (center < 1) throw std::invalid_argument("Star: center must be a positive label");
    if (leaves.empty()) throw std::invalid_argument("Star: needs at least one leaf");
    std::sort(leaves.begin(), leaves.end());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (leaves[i] < 1) throw std::invalid_argument("Star: leaf must be a positive label");
      if (leaves[i] == center) throw std::invalid_argument("Star: center cannot be a leaf");
      if (i > 0 && leaves[i] == leaves[i - 1]) throw std::invalid_argument("Star: duplicate leaf");
    }
  }
};

struct Triangle {
  std::array<int, 3> vertices{};  // sorted, distinct

  explicit Triangle(std::array<int, 3> v) : vertices(v) {
    std::sort(vertices.begin(), vertices.end());
    if (vertices[0] < 1 || vertices[0] == vertices[1] || vertices[1] == vertices[2]) {
      throw std::invalid_argument("Triangle: needs 3 distinct positive labels");
    }
  }
  Triangle(int a, int b, int c) : Triangle(std::array<int, 3>{a, b, c}) {}
};

class STPart {
 public:
  STPart(Star s) : v_(std::move(s)) {}
  STPart(Triangle t) : v_(t) {}

  bool is_star() const { return std::holds_alternative<Star>(v_); }
  bool is_triangle() const { return std::holds_alternative<Triangle>(v_); }
  const Star& star() const { return std::get<Star>(v_); }
  const Triangle& triangle() const { return std::get<Triangle>(v_); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    if (is_star()) {
      const Star& s = star();
      for (int l : s.leaves) out.push_back({std::min(s.center, l), std::max(s.center, l)});
    } else {
      const auto& t = triangle().vertices;
      out = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const STPart& a, const STPart& b) {
    if (a.is_star() != b.is_star()) return false;
    if (a.is_star()) {
      return a.star().center == b.star().center && a.star().leaves == b.star().leaves;
    }
    return a.triangle().vertices == b.triangle().vertices;
  }

 private:
  std::variant<Star, Triangle> v_;
};

struct STPartition {
  SimpleGraph host;
  std::vector<STPart> parts;
};

struct EdgeFault {
  enum class Kind { uncovered, doubly_covered, outside_host };
  Kind kind;
  Edge edge;

  std::string describe() const {
    std::string what = kind == Kind::uncovered       ? "uncovered"
                       : kind == Kind::doubly_covered ? "doubly covered"
                                                      : "outside host";
    return "edge {" + std::to_string(edge.first) + "," + std::to_string(edge.second) + "} " + what;
  }
};

struct ValidationReport {
  std::vector<EdgeFault> faults;
  bool ok() const { return faults.empty(); }
};

// Checks exact cover: every part edge inside the host, no edge covered twice,
// no host edge left uncovered. Violations are data, not errors.
inline ValidationReport validate_partition(const STPartition& p) {
  ValidationReport report;
  std::vector<int> cover(p.host.edge_count(), 0);
  for (const STPart& part : p.parts) {
    for (Edge e : part.edges()) {
      int idx = p.host.edge_index(e.first, e.second);
      if (idx < 0) {
        report.faults.push_back({EdgeFault::Kind::outside_host, e});
      } else if (++cover[idx] == 2) {
        report.faults.push_back({EdgeFault::Kind::doubly_covered, e});
      }
    }
  }
  for (int i = 0; i < p.host.edge_count(); ++i) {
    if (cover[i] == 0) report.faults.push_back({EdgeFault::Kind::uncovered, p.host.edges()[i]});
  }
  return report;
}

}  // namespace stpart::model
