#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"
#include "ualg/trace.hpp"

namespace ualg {

/// Tests operation compatibility one coordinate at a time: a partition is
/// compatible iff changing any single argument within its block keeps the
/// result within a block.
inline bool is_compatible(const FiniteAlgebra& alg, const Partition& part) {
  const int n = alg.size();
  const auto& sig = alg.signature();
  std::vector<Element> args;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const int r = sig[s].arity;
    if (r == 0) continue;
    const std::size_t count = FiniteAlgebra::table_size(n, r);
    for (std::size_t flat = 0; flat < count; ++flat) {
      args.assign(r, 0);
      std::size_t rest = flat;
      for (int i = r - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      const Element base = alg.apply(static_cast<int>(s), args);
      for (int i = 0; i < r; ++i) {
        const Element keep = args[i];
        for (Element y = 0; y < n; ++y) {
          if (!part.related(keep, y)) continue;
          args[i] = y;
          if (!part.related(base, alg.apply(static_cast<int>(s), args))) return false;
        }
        args[i] = keep;
      }
    }
  }
  return true;
}

/// An operation-compatible partition of an algebra's carrier.
class Congruence {
 public:
  Congruence() = default;

  Congruence(FiniteAlgebra algebra, Partition partition)
      : algebra_(std::move(algebra)), partition_(std::move(partition)) {
    if (partition_.size() != algebra_.size())
      throw std::invalid_argument("congruence: partition size must match carrier");
    if (!is_compatible(algebra_, partition_))
      throw std::invalid_argument("congruence: partition is not operation-compatible");
  }

  const FiniteAlgebra& algebra() const { return algebra_; }
  const Partition& partition() const { return partition_; }
  bool related(Element x, Element y) const { return partition_.related(x, y); }
  int size() const { return partition_.size(); }

  static Congruence diagonal(const FiniteAlgebra& a) { return Congruence(a, Partition::discrete(a.size())); }
  static Congruence total(const FiniteAlgebra& a) { return Congruence(a, Partition::all(a.size())); }

 private:
  FiniteAlgebra algebra_;
  Partition partition_;
};

/// Least congruence containing the given pairs, with a derivation trace.
///
/// Worklist closure over a union-find: generators first, then repeated
/// deterministic passes applying every operation to class-wise equal
/// argument tuples (symbols in signature order, tuples in lexicographic
/// order) until no class merges remain. The first justification that merges
/// two classes is the one recorded.
inline std::pair<Congruence, DerivationTrace> congruence_generated(
    const FiniteAlgebra& alg, const std::vector<std::pair<Element, Element>>& pairs) {
  const int n = alg.size();
  for (auto [a, b] : pairs)
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("congruence_generated: pair outside carrier");

  UnionFind uf(n);
  std::vector<MergeEvent> events;

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    if (uf.unite(a, b)) events.push_back({a, b, GeneratorStep{static_cast<int>(k), false}});
  }

  const auto& sig = alg.signature();
  std::vector<Element> args(4), key(4);
  bool changed = !events.empty();
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const int r = sig[s].arity;
      if (r == 0) continue;
      // first tuple seen per class-key and its op result
      std::map<std::vector<int>, std::pair<std::vector<Element>, Element>> groups;
      const std::size_t count = FiniteAlgebra::table_size(n, r);
      for (std::size_t flat = 0; flat < count; ++flat) {
        args.assign(r, 0);
        std::size_t rest = flat;
        for (int i = r - 1; i >= 0; --i) {
          args[i] = static_cast<int>(rest % n);
          rest /= n;
        }
        key.assign(r, 0);
        for (int i = 0; i < r; ++i) key[i] = uf.find(args[i]);
        const Element res = alg.apply(static_cast<int>(s), args);
        auto [it, fresh] = groups.try_emplace(key, args, res);
        if (fresh) continue;
        const auto& [first, first_res] = it->second;
        if (!uf.same(first_res, res)) {
          OpStep step{static_cast<int>(s), {}};
          for (int i = 0; i < r; ++i) step.args.emplace_back(first[i], args[i]);
          events.push_back({first_res, res, std::move(step)});
          uf.unite(first_res, res);
          changed = true;
        }
      }
    }
  }

  Partition part = Partition::from_union_find(uf);
  return {Congruence(alg, std::move(part)), DerivationTrace(n, pairs, std::move(events))};
}

inline std::pair<Congruence, DerivationTrace> principal_congruence(const FiniteAlgebra& alg, Element x,
                                                                   Element y) {
  return congruence_generated(alg, {{x, y}});
}

/// Every congruence of the algebra, canonically ordered. Carriers up to 8
/// are handled by filtering all partitions; larger ones (up to the bound)
/// by closing the principal congruences under join.
inline std::vector<Congruence> all_congruences(const FiniteAlgebra& alg, int size_bound = 12) {
  const int n = alg.size();
  if (n > size_bound) throw std::invalid_argument("all_congruences: carrier exceeds size bound");
  std::set<Partition> found;

  if (n <= 8) {
    // restricted-growth enumeration of all partitions
    std::vector<int> assign(n, 0);
    std::vector<int> first_of(n + 1, -1);
    auto rec = [&](auto&& self, int pos, int used) -> void {
      if (pos == n) {
        std::vector<int> raw(n);
        for (int i = 0; i < n; ++i) raw[i] = first_of[assign[i]];
        Partition p = Partition::from_representatives(std::move(raw));
        if (is_compatible(alg, p)) found.insert(std::move(p));
        return;
      }
      for (int b = 0; b <= used; ++b) {
        assign[pos] = b;
        const int saved = first_of[b];
        if (saved < 0) first_of[b] = pos;
        self(self, pos + 1, b == used ? used + 1 : used);
        first_of[b] = saved;
      }
    };
    rec(rec, 0, 0);
  } else {
    found.insert(Partition::discrete(n));
    std::set<Partition> frontier;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        frontier.insert(congruence_generated(alg, {{x, y}}).first.partition());
    found.insert(frontier.begin(), frontier.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Partition> cur(found.begin(), found.end());
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          Partition jn = join(cur[i], cur[j]);
          if (found.insert(std::move(jn)).second) grew = true;
        }
    }
  }

  std::vector<Congruence> out;
  out.reserve(found.size());
  for (const auto& p : found) out.emplace_back(alg, p);
  return out;
}

}  // namespace ualg
