#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ualg/signature.hpp"

namespace ualg {

/// A term over a signature: either a variable (by index) or an operation
/// symbol applied to child terms. Terms are immutable value trees.
class Term {
 public:
  /// Variable leaf.
  static Term var(int index) {
    Term t;
    t.var_ = index;
    return t;
  }

  /// Operation application.
  static Term apply(int symbol, std::vector<Term> children) {
    Term t;
    t.symbol_ = symbol;
    t.children_ = std::move(children);
    return t;
  }

  bool is_var() const { return var_ >= 0; }
  int var_index() const { return var_; }
  int symbol() const { return symbol_; }
  const std::vector<Term>& children() const { return children_; }

  /// Largest variable index occurring in the term plus one (0 for closed terms).
  int var_count() const {
    if (is_var()) return var_ + 1;
    int m = 0;
    for (const auto& c : children_) m = std::max(m, c.var_count());
    return m;
  }

  /// Checks arities against a signature; throws on mismatch.
  void validate(const Signature& sig) const {
    if (is_var()) return;
    if (symbol_ < 0 || symbol_ >= static_cast<int>(sig.size()))
      throw std::invalid_argument("term: unknown symbol index");
    if (static_cast<int>(children_.size()) != sig[symbol_].arity)
      throw std::invalid_argument("term: arity mismatch for " + sig[symbol_].name);
    for (const auto& c : children_) c.validate(sig);
  }

  /// Renders with variable names, e.g. "sub(x, sub(y, x))".
  std::string to_string(const Signature& sig, const std::vector<std::string>& var_names) const {
    if (is_var()) {
      if (var_ < static_cast<int>(var_names.size())) return var_names[var_];
      return "v" + std::to_string(var_);
    }
    std::string out = sig[symbol_].name;
    if (children_.empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) out += ", ";
      out += children_[i].to_string(sig, var_names);
    }
    return out + ")";
  }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  int var_ = -1;
  int symbol_ = -1;
  std::vector<Term> children_;
};

}  // namespace ualg
