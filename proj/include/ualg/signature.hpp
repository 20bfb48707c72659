#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ualg {

/// One operation symbol of a similarity type.
struct Symbol {
  std::string name;
  int arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// An ordered list of operation symbols. Constants are arity-0 symbols.
/// The order of symbols is significant: closure algorithms and traces
/// iterate symbols in this order, which keeps results deterministic.
class Signature {
 public:
  Signature() = default;

  explicit Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (const auto& s : symbols_) {
      if (s.arity < 0) throw std::invalid_argument("signature: negative arity for " + s.name);
      if (s.arity > kMaxArity)
        throw std::invalid_argument("signature: arity of " + s.name + " exceeds supported maximum");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      for (std::size_t j = i + 1; j < symbols_.size(); ++j)
        if (symbols_[i].name == symbols_[j].name)
          throw std::invalid_argument("signature: duplicate symbol " + symbols_[i].name);
  }

  static constexpr int kMaxArity = 4;

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].name == name) return static_cast<int>(i);
    return -1;
  }

  bool has_constants() const {
    return std::any_of(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.arity == 0; });
  }

  std::vector<int> constant_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].arity == 0) out.push_back(static_cast<int>(i));
    return out;
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

}  // namespace ualg
