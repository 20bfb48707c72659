#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/homomorphism.hpp"

namespace ualg {

struct ProductResult {
  FiniteAlgebra algebra;
  Homomorphism pi1;
  Homomorphism pi2;

  Element pair_index(Element a, Element b) const { return a * pi2.target().size() + b; }
};

/// Direct product with coordinatewise operations; element (a, b) sits at
/// index a*|B| + b.
inline ProductResult product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.signature() != b.signature()) throw std::invalid_argument("product: signature mismatch");
  const int na = a.size(), nb = b.size();
  const int n = na * nb;
  const auto& sig = a.signature();

  std::vector<std::vector<int>> tables;
  std::vector<Element> args, aa, bb;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const int r = sig[s].arity;
    const std::size_t count = FiniteAlgebra::table_size(n, r);
    std::vector<int> table(count);
    for (std::size_t flat = 0; flat < count; ++flat) {
      args.assign(r, 0);
      std::size_t rest = flat;
      for (int i = r - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      aa.assign(r, 0);
      bb.assign(r, 0);
      for (int i = 0; i < r; ++i) {
        aa[i] = args[i] / nb;
        bb[i] = args[i] % nb;
      }
      table[flat] = a.apply(static_cast<int>(s), aa) * nb + b.apply(static_cast<int>(s), bb);
    }
    tables.push_back(std::move(table));
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");

  FiniteAlgebra prod(a.name() + "x" + b.name(), sig, n, std::move(tables), std::move(labels));
  std::vector<int> m1(n), m2(n);
  for (int i = 0; i < n; ++i) {
    m1[i] = i / nb;
    m2[i] = i % nb;
  }
  return {prod, Homomorphism(prod, a, std::move(m1)), Homomorphism(prod, b, std::move(m2))};
}

/// Least subset containing the seed and all constants, closed under every
/// operation. Returned sorted ascending.
inline std::vector<Element> subalgebra_generated(const FiniteAlgebra& alg,
                                                 const std::vector<Element>& seed) {
  const auto& sig = alg.signature();
  std::set<Element> cur;
  for (Element e : seed) {
    if (e < 0 || e >= alg.size()) throw std::invalid_argument("subalgebra_generated: seed outside carrier");
    cur.insert(e);
  }
  for (int c : sig.constant_indices()) cur.insert(alg.constant_value(c));

  bool grew = true;
  std::vector<Element> args;
  while (grew) {
    grew = false;
    std::vector<Element> members(cur.begin(), cur.end());
    const int m = static_cast<int>(members.size());
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const int r = sig[s].arity;
      if (r == 0) continue;
      std::vector<int> pick(r, 0);
      while (true) {
        args.assign(r, 0);
        for (int i = 0; i < r; ++i) args[i] = members[pick[i]];
        if (cur.insert(alg.apply(static_cast<int>(s), args)).second) grew = true;
        int i = r - 1;
        while (i >= 0 && ++pick[i] == m) pick[i--] = 0;
        if (i < 0) break;
      }
      if (m == 0) break;
    }
  }
  return {cur.begin(), cur.end()};
}

struct QuotientResult {
  FiniteAlgebra algebra;
  Homomorphism q;
};

/// Quotient by a congruence. Classes are indexed by their least
/// representative in ascending order, which makes quotients canonical.
inline QuotientResult quotient(const FiniteAlgebra& alg, const Congruence& theta) {
  if (!theta.algebra().same_structure(alg)) throw std::invalid_argument("quotient: congruence on a different algebra");
  const auto blocks = theta.partition().blocks();
  const int m = static_cast<int>(blocks.size());
  std::vector<int> cls(alg.size());
  std::vector<Element> rep(m);
  for (int b = 0; b < m; ++b) {
    rep[b] = blocks[b].front();
    for (Element e : blocks[b]) cls[e] = b;
  }

  const auto& sig = alg.signature();
  std::vector<std::vector<int>> tables;
  std::vector<Element> args;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const int r = sig[s].arity;
    const std::size_t count = FiniteAlgebra::table_size(m, r);
    std::vector<int> table(count);
    for (std::size_t flat = 0; flat < count; ++flat) {
      args.assign(r, 0);
      std::size_t rest = flat;
      for (int i = r - 1; i >= 0; --i) {
        args[i] = rep[static_cast<int>(rest % m)];
        rest /= m;
      }
      table[flat] = cls[alg.apply(static_cast<int>(s), args)];
    }
    tables.push_back(std::move(table));
  }

  std::vector<std::string> labels;
  for (int b = 0; b < m; ++b) {
    std::string l = "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) l += (i ? "," : "") + alg.label(blocks[b][i]);
    labels.push_back(l + "}");
  }

  FiniteAlgebra quot(alg.name() + "/~", sig, m, std::move(tables), std::move(labels));
  return {quot, Homomorphism(alg, quot, std::move(cls))};
}

/// Fibre partition of a homomorphism; always a congruence.
inline Congruence kernel_congruence(const Homomorphism& f) {
  const int n = f.source().size();
  std::vector<int> raw(n);
  std::vector<int> first(f.target().size(), -1);
  for (int i = 0; i < n; ++i) {
    if (first[f(i)] < 0) first[f(i)] = i;
    raw[i] = first[f(i)];
  }
  return Congruence(f.source(), Partition::from_representatives(std::move(raw)));
}

struct PullbackAlgebra {
  FiniteAlgebra algebra;                          // carrier = agreeing pairs, lex order
  std::vector<std::pair<Element, Element>> pairs; // pairs[i] = (a, b) with f(a) = g(b)
  Homomorphism p1;
  Homomorphism p2;

  int index_of(Element a, Element b) const {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
    if (it == pairs.end() || *it != std::make_pair(a, b)) return -1;
    return static_cast<int>(it - pairs.begin());
  }
};

/// Pullback of f: A -> X along g: B -> X, carved out of the product as the
/// pairs with equal image. May be empty only for constant-free signatures.
inline PullbackAlgebra pullback(const Homomorphism& f, const Homomorphism& g) {
  if (!f.target().same_structure(g.target())) throw std::invalid_argument("pullback: codomain mismatch");
  const FiniteAlgebra& a = f.source();
  const FiniteAlgebra& b = g.source();

  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < b.size(); ++y)
      if (f(x) == g(y)) pairs.emplace_back(x, y);

  if (pairs.empty() && a.signature().has_constants())
    throw std::logic_error("pullback: empty carrier despite constants in the signature");

  std::map<std::pair<Element, Element>, int> idx;
  for (std::size_t i = 0; i < pairs.size(); ++i) idx[pairs[i]] = static_cast<int>(i);

  const auto& sig = a.signature();
  const int n = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> tables;
  std::vector<Element> args, aa, bb;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const int r = sig[s].arity;
    const std::size_t count = FiniteAlgebra::table_size(n, r);
    std::vector<int> table(count);
    for (std::size_t flat = 0; flat < count; ++flat) {
      args.assign(r, 0);
      std::size_t rest = flat;
      for (int i = r - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      aa.assign(r, 0);
      bb.assign(r, 0);
      for (int i = 0; i < r; ++i) {
        aa[i] = pairs[args[i]].first;
        bb[i] = pairs[args[i]].second;
      }
      table[flat] = idx.at({a.apply(static_cast<int>(s), aa), b.apply(static_cast<int>(s), bb)});
    }
    tables.push_back(std::move(table));
  }

  std::vector<std::string> labels;
  for (auto [x, y] : pairs) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");

  FiniteAlgebra pb(a.name() + "x_" + f.target().name() + "_" + b.name(), sig, n, std::move(tables),
                   std::move(labels));
  std::vector<int> m1(n), m2(n);
  for (int i = 0; i < n; ++i) {
    m1[i] = pairs[i].first;
    m2[i] = pairs[i].second;
  }
  return {pb, std::move(pairs), Homomorphism(pb, a, std::move(m1)), Homomorphism(pb, b, std::move(m2))};
}

}  // namespace ualg
