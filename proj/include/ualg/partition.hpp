#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ualg {

/// Union-find over {0..n-1} with path compression.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Merges the classes of a and b; returns false if already joined.
  /// The smaller root wins so representatives stay least-element.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  mutable std::vector<int> parent_;
};

/// A partition of {0..n-1} in canonical form: each element stores the least
/// element of its block, so equal partitions have equal arrays.
class Partition {
 public:
  Partition() = default;

  static Partition discrete(int n) {
    Partition p;
    p.rep_.resize(n);
    std::iota(p.rep_.begin(), p.rep_.end(), 0);
    return p;
  }

  static Partition all(int n) {
    Partition p;
    p.rep_.assign(n, 0);
    return p;
  }

  static Partition from_union_find(const UnionFind& uf) {
    Partition p;
    p.rep_.resize(uf.size());
    // roots are least elements by the unite() policy
    for (int i = 0; i < uf.size(); ++i) p.rep_[i] = uf.find(i);
    return p;
  }

  static Partition from_representatives(std::vector<int> raw) {
    // normalize arbitrary representative choices to least-element form
    const int n = static_cast<int>(raw.size());
    Partition p;
    p.rep_.assign(n, -1);
    std::vector<int> least(n, -1);
    for (int i = 0; i < n; ++i) {
      int r = raw[i];
      if (r < 0 || r >= n) throw std::invalid_argument("partition: representative out of range");
      if (least[r] < 0) least[r] = i;
    }
    for (int i = 0; i < n; ++i) p.rep_[i] = least[raw[i]];
    return p;
  }

  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    for (const auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("partition: empty block");
      const int least = *std::min_element(b.begin(), b.end());
      for (int x : b) {
        if (x < 0 || x >= n) throw std::invalid_argument("partition: element out of range");
        if (raw[x] != -1) throw std::invalid_argument("partition: element in two blocks");
        raw[x] = least;
      }
    }
    for (int x = 0; x < n; ++x)
      if (raw[x] == -1) throw std::invalid_argument("partition: element missing from blocks");
    return from_representatives(std::move(raw));
  }

  int size() const { return static_cast<int>(rep_.size()); }
  int representative(int x) const { return rep_[x]; }
  bool related(int x, int y) const { return rep_[x] == rep_[y]; }
  const std::vector<int>& representatives() const { return rep_; }

  int block_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
      if (rep_[i] == i) ++c;
    return c;
  }

  /// Blocks sorted by least element; each block sorted ascending.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    std::vector<int> where(size(), -1);
    for (int i = 0; i < size(); ++i) {
      if (rep_[i] == i) {
        where[i] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[where[rep_[i]]].push_back(i);
    }
    return out;
  }

  /// this <= other in the refinement order (every block fits in an other-block).
  bool refines(const Partition& other) const {
    for (int i = 0; i < size(); ++i)
      if (!other.related(i, rep_[i])) return false;
    return true;
  }

  friend Partition meet(const Partition& a, const Partition& b) {
    const int n = a.size();
    std::vector<int> raw(n);
    // pair (rep_a, rep_b) keyed by first occurrence
    std::vector<int> first(static_cast<std::size_t>(n) * 2, 0);
    for (int i = 0; i < n; ++i) {
      int match = i;
      for (int j = 0; j < i; ++j)
        if (a.rep_[j] == a.rep_[i] && b.rep_[j] == b.rep_[i]) {
          match = j;
          break;
        }
      raw[i] = match;
    }
    (void)first;
    return from_representatives(std::move(raw));
  }

  /// Join as equivalence relations: transitive closure of the union.
  friend Partition join(const Partition& a, const Partition& b) {
    UnionFind uf(a.size());
    for (int i = 0; i < a.size(); ++i) {
      uf.unite(i, a.rep_[i]);
      uf.unite(i, b.rep_[i]);
    }
    return from_union_find(uf);
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& x, const Partition& y) { return x.rep_ < y.rep_; }

 private:
  std::vector<int> rep_;
};

}  // namespace ualg
