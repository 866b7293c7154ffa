#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stpart/ksubset.hpp"
#include "stpart/st_partition.hpp"

namespace stpart::model {

using core::KneserDescriptor;
using core::KSubset;

// The vertices of one color, kept in lexicographic order.
struct ColorClass {
  std::vector<KSubset> members;

  // Intersection of all members as a label mask; nonzero iff star-shaped.
  std::uint64_t common_mask() const {
    if (members.empty()) throw std::invalid_argument("ColorClass: empty class");
    std::uint64_t m = ~std::uint64_t{0};
    for (const KSubset& s : members) m &= s.mask();
    return m;
  }
};

inline bool is_star_shaped(const ColorClass& f) { return f.common_mask() != 0; }

struct StarShaped {
  std::vector<int> common;  // full common intersection, sorted
};
struct TriangleClass {};
struct NotIntersecting {};
using Classification = std::variant<StarShaped, TriangleClass, NotIntersecting>;

// For k=2 only: a class is star-shaped, exactly a triangle {ab,bc,ca}, or
// improper. Two edges of a triangle have a common vertex and classify as
// star-shaped, not as a triangle.
inline Classification classify_class(const ColorClass& f) {
  if (f.members.empty()) throw std::invalid_argument("classify_class: empty class");
  for (const KSubset& s : f.members) {
    if (s.k() != 2) throw std::invalid_argument("classify_class: defined for k = 2 only");
  }
  std::uint64_t common = f.common_mask();
  if (common != 0) {
    std::vector<int> elems;
    for (int v = 1; v <= core::max_label; ++v)
      if ((common >> (v - 1)) & 1) elems.push_back(v);
    return StarShaped{std::move(elems)};
  }
  if (f.members.size() == 3) {
    std::uint64_t span = 0;
    for (const KSubset& s : f.members) span |= s.mask();
    if (std::popcount(span) == 3) return TriangleClass{};  // 3 pairs on 3 vertices
  }
  return NotIntersecting{};
}

// A total assignment of colors to the vertices of KG(n,k).
class Coloring {
 public:
  Coloring(KneserDescriptor d, std::map<KSubset, int> assignment)
      : descriptor_(d), assignment_(std::move(assignment)) {
    auto verts = d.vertices();
    if (assignment_.size() != verts.size()) {
      throw std::invalid_argument("Coloring: assignment must be total on all k-subsets (expected " +
                                  std::to_string(verts.size()) + ", got " +
                                  std::to_string(assignment_.size()) + ")");
    }
    for (const KSubset& v : verts) {
      auto it = assignment_.find(v);
      if (it == assignment_.end()) {
        throw std::invalid_argument("Coloring: vertex {" + v.key() + "} has no color");
      }
      if (it->second < 1) throw std::invalid_argument("Coloring: color ids must be >= 1");
      classes_[it->second].members.push_back(v);
    }
  }

  const KneserDescriptor& descriptor() const { return descriptor_; }
  int n() const { return descriptor_.n; }
  int k() const { return descriptor_.k; }
  const std::map<KSubset, int>& assignment() const { return assignment_; }
  const std::map<int, ColorClass>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }

  int color_of(const KSubset& v) const {
    auto it = assignment_.find(v);
    if (it == assignment_.end()) {
      throw std::invalid_argument("Coloring: unknown vertex {" + v.key() + "}");
    }
    return it->second;
  }

  // Renumber classes 1..m in order of each class's lexicographically smallest
  // member, so equal colorings serialize identically.
  Coloring normalized() const {
    std::vector<std::pair<KSubset, int>> reps;
    for (const auto& [id, cls] : classes_) reps.push_back({cls.members.front(), id});
    std::sort(reps.begin(), reps.end());
    std::map<int, int> renumber;
    for (std::size_t i = 0; i < reps.size(); ++i) renumber[reps[i].second] = static_cast<int>(i) + 1;
    std::map<KSubset, int> out;
    for (const auto& [v, c] : assignment_) out[v] = renumber.at(c);
    return Coloring(descriptor_, std::move(out));
  }

 private:
  KneserDescriptor descriptor_;
  std::map<KSubset, int> assignment_;
  std::map<int, ColorClass> classes_;
};

struct ProperCheck {
  bool proper = true;
  // Two disjoint k-subsets sharing a color, when improper.
  std::optional<std::pair<KSubset, KSubset>> witness;
};

inline ProperCheck is_proper_coloring(const Coloring& c) {
  for (const auto& [id, cls] : c.classes()) {
    const auto& mem = cls.members;
    for (std::size_t i = 0; i < mem.size(); ++i) {
      for (std::size_t j = i + 1; j < mem.size(); ++j) {
        if (disjoint(mem[i], mem[j])) return {false, std::pair{mem[i], mem[j]}};
      }
    }
  }
  return {};
}

inline void require_proper(const Coloring& c, const char* who) {
  ProperCheck pc = is_proper_coloring(c);
  if (!pc.proper) {
    throw std::invalid_argument(std::string(who) + ": coloring is improper, vertices {" +
                                pc.witness->first.key() + "} and {" + pc.witness->second.key() +
                                "} are adjacent and share a color");
  }
}

// Number of color classes with empty total intersection.
inline int count_non_star_shaped(const Coloring& c) {
  require_proper(c, "count_non_star_shaped");
  int count = 0;
  for (const auto& [id, cls] : c.classes())
    if (!is_star_shaped(cls)) ++count;
  return count;
}

// Part i (in input order) gets color i. Requires a valid partition of a
// complete host.
inline Coloring partition_to_coloring(const STPartition& p) {
  ValidationReport vr = validate_partition(p);
  if (!vr.ok()) {
    throw std::invalid_argument("partition_to_coloring: invalid partition, " +
                                vr.faults.front().describe() + " (" +
                                std::to_string(vr.faults.size()) + " fault(s))");
  }
  if (!p.host.is_complete()) {
    throw std::invalid_argument("partition_to_coloring: host must be a complete graph");
  }
  std::map<KSubset, int> assignment;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Edge e : p.parts[i].edges()) {
      assignment[KSubset{e.first, e.second}] = static_cast<int>(i) + 1;
    }
  }
  return Coloring(KneserDescriptor(p.host.vertex_count(), 2), std::move(assignment));
}

// Each class becomes one part; star-shaped classes get center = smallest
// common element. Requires a proper coloring with k = 2.
inline STPartition coloring_to_partition(const Coloring& c) {
  if (c.k() != 2) throw std::invalid_argument("coloring_to_partition: defined for k = 2 only");
  require_proper(c, "coloring_to_partition");
  STPartition out{core::complete_graph(c.n()), {}};
  for (const auto& [id, cls] : c.classes()) {
    Classification kind = classify_class(cls);
    if (std::holds_alternative<TriangleClass>(kind)) {
      std::uint64_t span = 0;
      for (const KSubset& s : cls.members) span |= s.mask();
      std::vector<int> verts;
      for (int v = 1; v <= c.n(); ++v)
        if ((span >> (v - 1)) & 1) verts.push_back(v);
      out.parts.push_back(Triangle(verts[0], verts[1], verts[2]));
    } else if (auto* star = std::get_if<StarShaped>(&kind)) {
      int center = star->common.front();
      std::vector<int> leaves;
      for (const KSubset& s : cls.members) {
        leaves.push_back(s.elements()[0] == center ? s.elements()[1] : s.elements()[0]);
      }
      out.parts.push_back(Star(center, std::move(leaves)));
    } else {
      // Unreachable for proper colorings: a pairwise-intersecting family of
      // 2-sets is a star or a triangle.
      throw std::logic_error("coloring_to_partition: proper class failed to classify");
    }
  }
  return out;
}

}  // namespace stpart::model
