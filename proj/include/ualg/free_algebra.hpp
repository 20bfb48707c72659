#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/constructions.hpp"
#include "ualg/homomorphism.hpp"
#include "ualg/term.hpp"

namespace ualg {

inline constexpr std::size_t kDefaultFreeCap = 1'000'000;

namespace detail {

/// Closure of the k projections (and constants) inside A^(A^k) under all
/// operations, computed pointwise on function tables. Discovery is
/// breadth-first by term depth with ties broken by signature order, so the
/// recorded witness terms are depth-minimal and deterministic.
struct TermFunctions {
  std::size_t domain = 0;                 // |A|^k
  std::vector<std::vector<int>> members;  // function tables over the tuple space
  std::vector<Term> witnesses;
  std::vector<int> projections;           // member indices of the k projections
};

inline TermFunctions generate_term_functions(const FiniteAlgebra& a, int rank, std::size_t cap) {
  if (rank < 1 || rank > 3) throw std::invalid_argument("free_algebra: rank must be 1, 2, or 3");
  if (a.size() == 0) throw std::invalid_argument("free_algebra: empty base algebra");
  std::size_t domain = 1;
  for (int i = 0; i < rank; ++i) {
    domain *= static_cast<std::size_t>(a.size());
    if (domain > cap)
      throw std::runtime_error("free_algebra: |A|^rank exceeds the configured cap of " + std::to_string(cap));
  }

  TermFunctions out;
  out.domain = domain;
  std::map<std::vector<int>, int> index;
  auto insert = [&](const std::vector<int>& fn, const Term& witness) -> bool {
    if (index.count(fn)) return false;
    if (out.members.size() >= cap)
      throw std::runtime_error("free_algebra: explored elements exceed the configured cap of " +
                               std::to_string(cap));
    index.emplace(fn, static_cast<int>(out.members.size()));
    out.members.push_back(fn);
    out.witnesses.push_back(witness);
    return true;
  };

  // the k projections, in variable order
  for (int i = 0; i < rank; ++i) {
    std::vector<int> fn(domain);
    for (std::size_t t = 0; t < domain; ++t) {
      std::size_t rest = t;
      int coord = 0;
      for (int j = rank - 1; j >= 0; --j) {
        if (j == i) coord = static_cast<int>(rest % a.size());
        rest /= a.size();
      }
      fn[t] = coord;
    }
    insert(fn, Term::var(i));
    out.projections.push_back(index.at(fn));
  }

  const auto& sig = a.signature();
  std::size_t frontier_start = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = out.members.size();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const int r = sig[s].arity;
      std::vector<std::size_t> pick(r, 0);
      while (true) {
        // require at least one argument from the previous layer so depth grows
        bool uses_frontier = r == 0 && frontier_start == 0;
        for (int i = 0; i < r; ++i)
          if (pick[i] >= frontier_start) uses_frontier = true;
        if (uses_frontier) {
          std::vector<int> fn(domain);
          std::vector<Element> args(r);
          for (std::size_t t = 0; t < domain; ++t) {
            for (int i = 0; i < r; ++i) args[i] = out.members[pick[i]][t];
            fn[t] = a.apply(static_cast<int>(s), args);
          }
          std::vector<Term> children;
          for (int i = 0; i < r; ++i) children.push_back(out.witnesses[pick[i]]);
          if (insert(fn, Term::apply(static_cast<int>(s), std::move(children)))) grew = true;
        }
        int i = r - 1;
        while (i >= 0 && ++pick[i] == snapshot) pick[i--] = 0;
        if (i < 0) break;
      }
    }
    frontier_start = snapshot;
  }
  return out;
}

}  // namespace detail

/// The free algebra on `rank` generators in the variety generated by a
/// finite algebra, realized concretely as the subalgebra of A^(A^rank)
/// generated by the projections. Each element carries a witness term over
/// the generators that evaluates to it pointwise.
struct FreeAlgebra {
  FiniteAlgebra base;
  int rank = 0;
  std::vector<std::vector<int>> elements;  // function tables
  std::vector<Term> witnesses;
  std::vector<int> generators;             // element indices of the projections
  FiniteAlgebra algebra;                   // the realized finite algebra
  std::optional<Element> zero;             // the constant-term element, when pointed

  /// Index of a function table in the carrier, or -1.
  int index_of(const std::vector<int>& fn) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == fn) return static_cast<int>(i);
    return -1;
  }
};

inline FreeAlgebra free_algebra(const FiniteAlgebra& a, int rank, std::size_t cap = kDefaultFreeCap,
                                std::vector<std::string> var_names = {}) {
  auto gen = detail::generate_term_functions(a, rank, cap);
  if (var_names.empty()) {
    const std::vector<std::string> defaults{"x", "y", "z"};
    var_names.assign(defaults.begin(), defaults.begin() + rank);
  }

  const int m = static_cast<int>(gen.members.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index.emplace(gen.members[i], i);

  const auto& sig = a.signature();
  std::vector<std::vector<int>> tables;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const int r = sig[s].arity;
    const std::size_t count = FiniteAlgebra::table_size(m, r);
    std::vector<int> table(count);
    std::vector<Element> args(r);
    std::vector<int> fn(gen.domain);
    for (std::size_t flat = 0; flat < count; ++flat) {
      std::vector<int> pick(r, 0);
      std::size_t rest = flat;
      for (int i = r - 1; i >= 0; --i) {
        pick[i] = static_cast<int>(rest % m);
        rest /= m;
      }
      for (std::size_t t = 0; t < gen.domain; ++t) {
        for (int i = 0; i < r; ++i) args[i] = gen.members[pick[i]][t];
        fn[t] = a.apply(static_cast<int>(s), args);
      }
      table[flat] = index.at(fn);
    }
    tables.push_back(std::move(table));
  }

  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) labels.push_back(gen.witnesses[i].to_string(sig, var_names));

  FreeAlgebra out;
  out.base = a;
  out.rank = rank;
  out.elements = std::move(gen.members);
  out.witnesses = std::move(gen.witnesses);
  out.generators = std::move(gen.projections);
  out.algebra = FiniteAlgebra("F(" + a.name() + "," + std::to_string(rank) + ")", sig, m,
                              std::move(tables), std::move(labels));

  const auto closure = subalgebra_generated(out.algebra, {});
  if (closure.size() == 1) out.zero = closure.front();
  return out;
}

/// The universal homomorphism out of a free algebra determined by images
/// of the generators: each element's witness term is evaluated at those
/// images. Valid whenever the target lies in the variety of the base.
inline Homomorphism universal_map(const FreeAlgebra& f, const FiniteAlgebra& target,
                                  const std::vector<Element>& generator_images) {
  if (static_cast<int>(generator_images.size()) != f.rank)
    throw std::invalid_argument("universal_map: one image per generator required");
  std::vector<int> map(f.algebra.size());
  for (int e = 0; e < f.algebra.size(); ++e)
    map[e] = eval_term(target, f.witnesses[e], generator_images);
  return Homomorphism(f.algebra, target, std::move(map));
}

/// All k-ary term operations of an algebra, with witness terms. Same
/// closure as the free algebra, without materializing operation tables.
struct CloneSlice {
  FiniteAlgebra base;
  int arity = 0;
  std::vector<std::vector<int>> members;
  std::vector<Term> witnesses;
  std::vector<int> projections;
};

inline CloneSlice clone_slice(const FiniteAlgebra& a, int arity, std::size_t cap = kDefaultFreeCap) {
  auto gen = detail::generate_term_functions(a, arity, cap);
  return {a, arity, std::move(gen.members), std::move(gen.witnesses), std::move(gen.projections)};
}

}  // namespace ualg
