#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stpart/budget.hpp"
#include "stpart/st_partition.hpp"

namespace stpart::search {

using core::SimpleGraph;
using model::Star;
using model::STPartition;
using model::Triangle;

struct EnumerationReport {
  SimpleGraph host;
  int target_size = 0;
  long long partitions_found = 0;
  std::map<int, long long> triangle_histogram;  // #triangle parts -> #partitions
  bool exhausted = true;
  long long nodes = 0;
};

namespace detail {

// Exhaustive generation of all ST-partitions of a host with exactly `target`
// parts, each emitted once up to part reordering. Edges are processed in
// lexicographic order; the lowest uncovered edge either joins an open part or
// opens a new one, so every partition is built along exactly one path. The
// single remaining ambiguity, the center of a star that ends up with one
// edge, is resolved at emission: such a star must be centered at the smaller
// endpoint.
class STEnumerator {
 public:
  using Sink = std::function<bool(const STPartition&)>;  // return false to stop

  STEnumerator(const SimpleGraph& host, int target, bool allow_triangles,
               const SearchBudget& budget, Sink sink)
      : host_(host),
        target_(target),
        allow_triangles_(allow_triangles),
        budget_(budget),
        sink_(std::move(sink)),
        n_(host.vertex_count()),
        m_(host.edge_count()) {
    edge_idx_.assign((n_ + 1) * (n_ + 1), -1);
    edge_mask_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      auto [u, v] = host_.edges()[i];
      edge_idx_[u * (n_ + 1) + v] = i;
      edge_idx_[v * (n_ + 1) + u] = i;
      edge_mask_[i] = (std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (v - 1));
    }
    suffix_deg_.assign((m_ + 1) * (n_ + 1), 0);
    suffix_maxdeg_.assign(m_ + 1, 0);
    for (int i = m_ - 1; i >= 0; --i) {
      for (int v = 0; v <= n_; ++v) {
        suffix_deg_[i * (n_ + 1) + v] = suffix_deg_[(i + 1) * (n_ + 1) + v];
      }
      auto [u, v] = host_.edges()[i];
      ++suffix_deg_[i * (n_ + 1) + u];
      ++suffix_deg_[i * (n_ + 1) + v];
      int md = 0;
      for (int w = 1; w <= n_; ++w) md = std::max(md, suffix_deg_[i * (n_ + 1) + w]);
      suffix_maxdeg_[i] = md;
    }
    pending_owner_.assign(m_, -1);
    emit_buffer_.host = host_;
    if (budget_.time_limit) {
      deadline_ = std::chrono::steady_clock::now() + *budget_.time_limit;
    }
  }

  EnumerationReport run() {
    report_.host = host_;
    report_.target_size = target_;
    parts_.reserve(std::max(target_, 0));
    if (target_ >= 0) recurse(0);
    report_.exhausted = !stopped_;
    report_.nodes = nodes_;
    return report_;
  }

 private:
  struct OpenPart {
    bool star;
    int center = 0;           // star only
    std::vector<int> leaves;  // star only
    int a = 0, b = 0, c = 0;  // triangle vertices; c == 0 while one edge
    int tri_edges = 0;
    int pending = -1;  // index of the third edge once a triangle has two
  };

  int idx(int u, int v) const { return edge_idx_[u * (n_ + 1) + v]; }
  int sdeg(int i, int v) const { return suffix_deg_[i * (n_ + 1) + v]; }

  bool budget_hit() {
    if (budget_.node_limit && nodes_ > *budget_.node_limit) return true;
    if (budget_.time_limit && (nodes_ & 0x1fff) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      return true;
    }
    return false;
  }

  void emit() {
    if (static_cast<int>(parts_.size()) != target_) return;
    for (const OpenPart& p : parts_) {
      if (p.star) {
        if (p.leaves.size() == 1 && p.center > p.leaves[0]) return;  // non-canonical twin
      } else if (p.tri_edges != 3) {
        return;
      }
    }
    emit_buffer_.parts.clear();
    int triangles = 0;
    for (const OpenPart& p : parts_) {
      if (p.star) {
        emit_buffer_.parts.push_back(Star(p.center, p.leaves));
      } else {
        emit_buffer_.parts.push_back(Triangle(p.a, p.b, p.c));
        ++triangles;
      }
    }
    ++report_.partitions_found;
    ++report_.triangle_histogram[triangles];
    if (!sink_(emit_buffer_)) stopped_ = true;
  }

  // Lower bounds on the parts still required by edges [i, m). Pairwise
  // vertex-disjoint edges can never share a part, so a greedy matching gives
  // a count of parts that must host them; open parts can each absorb at most
  // one. A capacity bound complements it: an open star only ever absorbs
  // edges at its center, a triangle at most its missing edges.
  bool bounds_cut(int i) {
    int open = static_cast<int>(parts_.size());
    int needed_new = target_ - open;
    int remaining = m_ - i;
    if (remaining < needed_new) return true;

    std::uint64_t mvertices = 0;
    int msize = 0;
    matched_.clear();
    for (int j = i; j < m_; ++j) {
      if ((edge_mask_[j] & mvertices) == 0) {
        mvertices |= edge_mask_[j];
        ++msize;
        matched_.push_back(j);
      }
    }

    int compat = 0;
    long long capacity = 0;
    for (const OpenPart& p : parts_) {
      if (p.star) {
        capacity += sdeg(i, p.center);
        if ((mvertices >> (p.center - 1)) & 1) ++compat;
      } else if (p.tri_edges == 1) {
        capacity += 2;
        std::uint64_t tm =
            (std::uint64_t{1} << (p.a - 1)) | (std::uint64_t{1} << (p.b - 1));
        if (tm & mvertices) ++compat;
      } else {
        capacity += 1;
        // pending edge is absorbable only if it is itself matched
        if (is_matched(p.pending)) ++compat;
      }
    }
    if (msize - compat > needed_new) return true;
    capacity += static_cast<long long>(needed_new) * std::max(3, suffix_maxdeg_[i]);
    return capacity < remaining;
  }

  bool is_matched(int j) const {
    for (int x : matched_)
      if (x == j) return true;
    return false;
  }

  void recurse(int i) {
    if (stopped_) return;
    ++nodes_;
    if (budget_hit()) {
      stopped_ = true;
      budget_fired_ = true;
      return;
    }
    if (i == m_) {
      emit();
      return;
    }

    // 1-edge triangles must still have a completion among uncovered edges
    for (const OpenPart& p : parts_) {
      if (!p.star && p.tri_edges == 1) {
        bool completable = false;
        for (int w = 1; w <= n_ && !completable; ++w) {
          if (w == p.a || w == p.b) continue;
          int ja = idx(p.a, w), jb = idx(p.b, w);
          if (ja >= i && jb >= i) completable = true;
        }
        if (!completable) return;
      }
    }
    if (bounds_cut(i)) return;

    auto [u, v] = host_.edges()[i];

    if (pending_owner_[i] >= 0) {
      // forced: this edge is the unique completion of an open triangle
      int owner = pending_owner_[i];
      parts_[owner].tri_edges = 3;
      pending_owner_[i] = -1;
      recurse(i + 1);
      pending_owner_[i] = owner;
      parts_[owner].tri_edges = 2;
      return;
    }

    // parts_ never outgrows its reserve(target_), so references into it
    // survive the recursive push_back calls below
    std::size_t part_count = parts_.size();
    for (std::size_t pi = 0; pi < part_count; ++pi) {
      OpenPart& p = parts_[pi];
      if (p.star) {
        if (p.center == u || p.center == v) {
          p.leaves.push_back(p.center == u ? v : u);
          recurse(i + 1);
          p.leaves.pop_back();
        }
      } else if (p.tri_edges == 1) {
        int shared = (u == p.a || u == p.b) + (v == p.a || v == p.b);
        if (shared == 1) {
          int joint = (u == p.a || u == p.b) ? u : v;
          int fresh = joint == u ? v : u;
          int other = joint == p.a ? p.b : p.a;
          int third = idx(other, fresh);
          if (third > i && pending_owner_[third] < 0) {
            int oa = p.a, ob = p.b;
            p.a = std::min({oa, ob, fresh});
            p.c = std::max({oa, ob, fresh});
            p.b = oa + ob + fresh - p.a - p.c;
            p.tri_edges = 2;
            p.pending = third;
            pending_owner_[third] = static_cast<int>(pi);
            recurse(i + 1);
            pending_owner_[third] = -1;
            p.pending = -1;
            p.a = oa;
            p.b = ob;
            p.c = 0;
            p.tri_edges = 1;
          }
        }
      }
      if (stopped_) return;
    }

    if (static_cast<int>(parts_.size()) < target_) {
      parts_.push_back({true, u, {v}, 0, 0, 0, 0});
      recurse(i + 1);
      parts_.pop_back();
      if (stopped_) return;

      parts_.push_back({true, v, {u}, 0, 0, 0, 0});
      recurse(i + 1);
      parts_.pop_back();
      if (stopped_) return;

      if (allow_triangles_) {
        bool completable = false;
        for (int w = 1; w <= n_ && !completable; ++w) {
          if (w == u || w == v) continue;
          if (idx(u, w) > i && idx(v, w) > i) completable = true;
        }
        if (completable) {
          parts_.push_back({false, 0, {}, u, v, 0, 1});
          recurse(i + 1);
          parts_.pop_back();
        }
      }
    }
  }

  const SimpleGraph& host_;
  int target_;
  bool allow_triangles_;
  SearchBudget budget_;
  Sink sink_;
  int n_, m_;

  std::vector<int> edge_idx_;
  std::vector<std::uint64_t> edge_mask_;
  std::vector<int> suffix_deg_;
  std::vector<int> suffix_maxdeg_;
  std::vector<OpenPart> parts_;
  std::vector<int> pending_owner_;
  std::vector<int> matched_;

  STPartition emit_buffer_;
  EnumerationReport report_;
  long long nodes_ = 0;
  bool stopped_ = false;
  bool budget_fired_ = false;
  std::chrono::steady_clock::time_point deadline_;

 public:
  bool budget_fired() const { return budget_fired_; }
};

}  // namespace detail

// Emits every ST-partition of h with exactly `size` parts, each exactly once
// up to part reordering. The sink may return false to stop early; the report
// then carries exhausted = false.
inline EnumerationReport enumerate_st_partitions(const SimpleGraph& h, int size,
                                                 const SearchBudget& budget,
                                                 detail::STEnumerator::Sink sink,
                                                 bool allow_triangles = true) {
  if (size < 0) throw std::invalid_argument("enumerate_st_partitions: size must be >= 0");
  detail::STEnumerator engine(h, size, allow_triangles, budget, std::move(sink));
  return engine.run();
}

// Collecting variant for small runs.
inline std::vector<STPartition> all_st_partitions(const SimpleGraph& h, int size,
                                                  const SearchBudget& budget = {}) {
  std::vector<STPartition> out;
  EnumerationReport r = enumerate_st_partitions(h, size, budget, [&](const STPartition& p) {
    out.push_back(p);
    return true;
  });
  if (!r.exhausted) throw BudgetExhausted("all_st_partitions: budget exhausted");
  return out;
}

namespace detail {

inline int min_partition_size_impl(const SimpleGraph& h, const SearchBudget& budget,
                                   bool allow_triangles, const char* who) {
  if (h.edge_count() == 0) {
    throw std::invalid_argument(std::string(who) + ": host needs at least one edge");
  }
  int cap = h.edge_count();  // one single-edge star per edge always works
  if (budget.max_parts) cap = static_cast<int>(std::min<long long>(cap, *budget.max_parts));
  for (int s = 1; s <= cap; ++s) {
    bool found = false;
    STEnumerator engine(h, s, allow_triangles, budget, [&](const STPartition&) {
      found = true;
      return false;
    });
    EnumerationReport r = engine.run();
    if (found) return s;
    if (!r.exhausted) {
      throw BudgetExhausted(std::string(who) + ": undetermined, budget exhausted at size " +
                            std::to_string(s));
    }
  }
  throw BudgetExhausted(std::string(who) + ": undetermined, max_parts cap reached");
}

}  // namespace detail

// Smallest s with a size-s ST-partition of h.
inline int min_st_partition_size(const SimpleGraph& h, const SearchBudget& budget = {}) {
  return detail::min_partition_size_impl(h, budget, true, "min_st_partition_size");
}

// Smallest s over star-only partitions (triangles forbidden).
inline int min_star_partition_size(const SimpleGraph& h, const SearchBudget& budget = {}) {
  return detail::min_partition_size_impl(h, budget, false, "min_star_partition_size");
}

}  // namespace stpart::search
