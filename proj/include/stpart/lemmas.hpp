#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stpart/st_partition.hpp"

namespace stpart::model {

// Checkers for the two structural facts about optimal ST-partitions. They run
// mechanically on any valid partition; optimality is the caller's hypothesis,
// so a violation on a non-optimal input is ordinary data.

struct TriangleCenterViolation {
  Triangle triangle;
  std::vector<int> centers;  // triangle vertices that center some star

  std::string describe() const {
    std::string s = "triangle {" + std::to_string(triangle.vertices[0]) + "," +
                    std::to_string(triangle.vertices[1]) + "," +
                    std::to_string(triangle.vertices[2]) + "} has star centers";
    for (int c : centers) s += " " + std::to_string(c);
    return s;
  }
};

// At most one vertex of each triangle part may center a star: one violation
// record per triangle with >= 2 center vertices.
inline std::vector<TriangleCenterViolation> check_lemma_min_tri(const STPartition& p) {
  std::uint64_t center_mask = 0;
  for (const STPart& part : p.parts) {
    if (part.is_star()) center_mask |= std::uint64_t{1} << (part.star().center - 1);
  }
  std::vector<TriangleCenterViolation> out;
  for (const STPart& part : p.parts) {
    if (!part.is_triangle()) continue;
    std::vector<int> centers;
    for (int v : part.triangle().vertices) {
      if ((center_mask >> (v - 1)) & 1) centers.push_back(v);
    }
    if (centers.size() >= 2) out.push_back({part.triangle(), std::move(centers)});
  }
  return out;
}

struct UncenteredVertexViolation {
  int vertex;
  Triangle triangle;

  std::string describe() const {
    return "vertex " + std::to_string(vertex) + " lies in no triangle, touches >= 2 vertices of {" +
           std::to_string(triangle.vertices[0]) + "," + std::to_string(triangle.vertices[1]) + "," +
           std::to_string(triangle.vertices[2]) + "}, and centers no star";
  }
};

// A vertex outside all triangle parts that is host-adjacent to >= 2 vertices
// of some triangle part must center a star: one violation per (vertex,
// triangle) pair breaking that.
inline std::vector<UncenteredVertexViolation> check_lemma_min_tri1(const STPartition& p) {
  std::uint64_t center_mask = 0;
  std::uint64_t triangle_mask = 0;
  for (const STPart& part : p.parts) {
    if (part.is_star()) {
      center_mask |= std::uint64_t{1} << (part.star().center - 1);
    } else {
      for (int v : part.triangle().vertices) triangle_mask |= std::uint64_t{1} << (v - 1);
    }
  }
  std::vector<UncenteredVertexViolation> out;
  for (int x = 1; x <= p.host.vertex_count(); ++x) {
    bool in_triangle = (triangle_mask >> (x - 1)) & 1;
    bool is_center = (center_mask >> (x - 1)) & 1;
    if (in_triangle || is_center) continue;
    for (const STPart& part : p.parts) {
      if (!part.is_triangle()) continue;
      int touched = 0;
      for (int v : part.triangle().vertices) {
        if (p.host.has_edge(x, v)) ++touched;
      }
      if (touched >= 2) out.push_back({x, part.triangle()});
    }
  }
  return out;
}

}  // namespace stpart::model
