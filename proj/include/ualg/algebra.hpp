#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ualg/signature.hpp"
#include "ualg/term.hpp"

namespace ualg {

/// An element is an index into an algebra's carrier {0..n-1}.
using Element = int;

/// A finite algebra: carrier {0..n-1} with one total operation table per
/// signature symbol. Tables are flattened row-major,
///   index(args) = sum args[i] * n^(arity-1-i),
/// so evaluation is a single lookup. Values are immutable after
/// construction; everything here is safe to share across threads.
class FiniteAlgebra {
 public:
  static constexpr int kMaxCarrier = 1 << 16;
  static constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

  FiniteAlgebra() = default;

  FiniteAlgebra(std::string name, Signature sig, int size, std::vector<std::vector<int>> tables,
                std::vector<std::string> labels = {})
      : name_(std::move(name)),
        sig_(std::move(sig)),
        size_(size),
        tables_(std::move(tables)),
        labels_(std::move(labels)) {
    if (size_ < 0 || size_ > kMaxCarrier) throw std::invalid_argument("algebra: carrier size out of range");
    if (tables_.size() != sig_.size()) throw std::invalid_argument("algebra: one table per symbol required");
    // A size-0 carrier only makes sense for constant-free signatures; it can
    // arise as an empty pullback and is never loadable from a file.
    if (size_ == 0 && sig_.has_constants())
      throw std::invalid_argument("algebra: empty carrier with constants in the signature");
    for (std::size_t s = 0; s < sig_.size(); ++s) {
      const std::size_t want = table_size(size_, sig_[s].arity);
      if (tables_[s].size() != want)
        throw std::invalid_argument("algebra: table for " + sig_[s].name + " has wrong length");
      for (int v : tables_[s])
        if (v < 0 || v >= size_) throw std::invalid_argument("algebra: table entry out of carrier for " + sig_[s].name);
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != size_)
      throw std::invalid_argument("algebra: label count must match carrier size");
  }

  static std::size_t table_size(int n, int arity) {
    std::size_t t = 1;
    for (int i = 0; i < arity; ++i) {
      t *= static_cast<std::size_t>(n);
      if (t > kMaxTableEntries) throw std::invalid_argument("algebra: operation table too large");
    }
    return t;
  }

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  int size() const { return size_; }
  const std::vector<std::vector<int>>& tables() const { return tables_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(Element e) const {
    if (!labels_.empty() && e >= 0 && e < static_cast<int>(labels_.size())) return labels_[e];
    return std::to_string(e);
  }

  std::size_t pack(std::span<const Element> args) const {
    std::size_t idx = 0;
    for (Element a : args) idx = idx * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
    return idx;
  }

  Element apply(int symbol, std::span<const Element> args) const {
    return tables_[symbol][pack(args)];
  }

  Element apply(int symbol, std::initializer_list<Element> args) const {
    return apply(symbol, std::span<const Element>(args.begin(), args.size()));
  }

  Element constant_value(int symbol) const { return tables_[symbol][0]; }

  /// The unique constant if this algebra generates a pointed variety, i.e.
  /// the subalgebra generated by the constants is a one-element subalgebra.
  std::optional<Element> pointed_zero() const {
    if (!sig_.has_constants() || size_ == 0) return std::nullopt;
    std::set<Element> closure;
    for (int c : sig_.constant_indices()) closure.insert(constant_value(c));
    if (closure.size() != 1) return std::nullopt;
    const Element z = *closure.begin();
    std::vector<Element> args;
    for (std::size_t s = 0; s < sig_.size(); ++s) {
      args.assign(static_cast<std::size_t>(sig_[s].arity), z);
      if (apply(static_cast<int>(s), args) != z) return std::nullopt;
    }
    return z;
  }

  bool is_pointed() const { return pointed_zero().has_value(); }

  Element require_pointed_zero(const char* who) const {
    auto z = pointed_zero();
    if (!z) throw std::invalid_argument(std::string(who) + ": algebra " + name_ + " is not pointed");
    return *z;
  }

  FiniteAlgebra with_name(std::string name) const {
    FiniteAlgebra a = *this;
    a.name_ = std::move(name);
    return a;
  }

  bool same_structure(const FiniteAlgebra& o) const {
    return sig_ == o.sig_ && size_ == o.size_ && tables_ == o.tables_;
  }

 private:
  std::string name_;
  Signature sig_;
  int size_ = 0;
  std::vector<std::vector<int>> tables_;
  std::vector<std::string> labels_;
};

/// Evaluates a term under an environment mapping variable index -> element.
/// Throws on unbound variables and arity mismatches.
inline Element eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const Element> env) {
  if (t.is_var()) {
    if (t.var_index() >= static_cast<int>(env.size()))
      throw std::invalid_argument("eval_term: unbound variable v" + std::to_string(t.var_index()));
    return env[t.var_index()];
  }
  const int sym = t.symbol();
  if (sym < 0 || sym >= static_cast<int>(alg.signature().size()))
    throw std::invalid_argument("eval_term: unknown symbol");
  if (static_cast<int>(t.children().size()) != alg.signature()[sym].arity)
    throw std::invalid_argument("eval_term: arity mismatch for " + alg.signature()[sym].name);
  std::vector<Element> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(eval_term(alg, c, env));
  return alg.apply(sym, args);
}

inline Element eval_term(const FiniteAlgebra& alg, const Term& t, const std::vector<Element>& env) {
  return eval_term(alg, t, std::span<const Element>(env));
}

/// The one-element algebra of a signature (terminal object of the variety).
inline FiniteAlgebra one_element_algebra(const Signature& sig) {
  std::vector<std::vector<int>> tables;
  for (const auto& s : sig.symbols()) tables.emplace_back(FiniteAlgebra::table_size(1, s.arity), 0);
  return FiniteAlgebra("terminal", sig, 1, std::move(tables));
}

}  // namespace ualg
