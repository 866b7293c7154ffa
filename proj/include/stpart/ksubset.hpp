#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace stpart::core {

// Labels are 1-based and must fit a 64-bit incidence mask.
inline constexpr int max_label = 64;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

// A k-element subset of {1..n}, stored strictly increasing. Doubles as a
// vertex of a Kneser graph and, for k=2, as an edge of a complete graph.
class KSubset {
 public:
  KSubset() = default;

  explicit KSubset(std::vector<int> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw std::invalid_argument("KSubset: empty element list");
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] < 1 || elems_[i] > max_label) {
        throw std::invalid_argument("KSubset: label out of range 1.." + std::to_string(max_label));
      }
      if (i > 0 && elems_[i] <= elems_[i - 1]) {
        throw std::invalid_argument("KSubset: elements must be strictly increasing");
      }
      mask_ |= std::uint64_t{1} << (elems_[i] - 1);
    }
  }

  KSubset(std::initializer_list<int> elements) : KSubset(std::vector<int>(elements)) {}

  int k() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const { return elems_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int label) const {
    return label >= 1 && label <= max_label && (mask_ >> (label - 1)) & 1;
  }
  int max_element() const { return elems_.back(); }

  // Comma-joined elements, e.g. "1,4"; the key format of all serializations.
  std::string key() const {
    std::string s;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(elems_[i]);
    }
    return s;
  }

  friend bool operator==(const KSubset& a, const KSubset& b) { return a.elems_ == b.elems_; }
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  std::vector<int> elems_;
  std::uint64_t mask_ = 0;
};

// Inverse of KSubset::key(); rejects anything but comma-joined strictly
// increasing plain decimals, so keys stay bit-exact under round trips.
inline KSubset parse_ksubset_key(const std::string& key) {
  std::vector<int> elems;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = key.find(',', pos);
    std::string token = key.substr(pos, next == std::string::npos ? next : next - pos);
    if (token.empty() || token.size() > 2 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("parse_ksubset_key: bad token '" + token + "' in '" + key + "'");
    }
    elems.push_back(std::stoi(token));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  KSubset s{std::move(elems)};  // enforces the strictly increasing order
  if (s.key() != key) throw std::invalid_argument("parse_ksubset_key: non-canonical key '" + key + "'");
  return s;
}

inline bool disjoint(const KSubset& a, const KSubset& b) { return (a.mask() & b.mask()) == 0; }

inline bool kneser_adjacent(const KSubset& a, const KSubset& b) {
  if (a.k() != b.k()) throw std::invalid_argument("kneser_adjacent: mismatched subset sizes");
  return disjoint(a, b);
}

// All C(n,k) subsets in lexicographic order.
inline std::vector<KSubset> k_subsets(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("k_subsets: need 0 <= k <= n");
  if (n > max_label) throw std::invalid_argument("k_subsets: n exceeds " + std::to_string(max_label));
  std::vector<KSubset> out;
  if (k == 0) return out;  // no nonempty subsets; KSubset requires k >= 1
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// The (n,k)-Kneser graph: vertices are all k-subsets of {1..n}, adjacency is
// disjointness. Adjacency is computed on demand, never materialized.
struct KneserDescriptor {
  int n = 0;
  int k = 0;

  KneserDescriptor(int n_, int k_) : n(n_), k(k_) {
    if (k < 1 || n < k) throw std::invalid_argument("KneserDescriptor: need 1 <= k <= n");
    if (n > max_label) {
      throw std::invalid_argument("KneserDescriptor: n exceeds " + std::to_string(max_label));
    }
  }

  std::uint64_t vertex_count() const { return binomial(n, k); }
  std::vector<KSubset> vertices() const { return k_subsets(n, k); }

  friend bool operator==(const KneserDescriptor&, const KneserDescriptor&) = default;
};

}  // namespace stpart::core
