#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// A homomorphism between finite algebras of the same signature, stored as
/// a total map on carrier indices. Construction validates that the map
/// commutes with every operation table.
class Homomorphism {
 public:
  Homomorphism() = default;

  Homomorphism(FiniteAlgebra source, FiniteAlgebra target, std::vector<int> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (source_.signature() != target_.signature())
      throw std::invalid_argument("homomorphism: signature mismatch");
    if (static_cast<int>(map_.size()) != source_.size())
      throw std::invalid_argument("homomorphism: map length must equal source carrier size");
    for (int v : map_)
      if (v < 0 || v >= target_.size()) throw std::invalid_argument("homomorphism: image out of target carrier");
    std::string why;
    if (!commutes(source_, target_, map_, &why)) throw std::invalid_argument("homomorphism: " + why);
  }

  /// Checks operation compatibility of a raw map without constructing.
  static bool commutes(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& map,
                       std::string* why = nullptr) {
    const auto& sig = a.signature();
    std::vector<Element> args, imgs;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const int r = sig[s].arity;
      args.assign(r, 0);
      imgs.assign(r, 0);
      const std::size_t count = FiniteAlgebra::table_size(a.size(), r);
      for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t rest = flat;
        for (int i = r - 1; i >= 0; --i) {
          args[i] = static_cast<int>(rest % a.size());
          rest /= a.size();
        }
        for (int i = 0; i < r; ++i) imgs[i] = map[args[i]];
        if (map[a.apply(static_cast<int>(s), args)] != b.apply(static_cast<int>(s), imgs)) {
          if (why) {
            *why = "map does not commute with " + sig[s].name + " at (";
            for (int i = 0; i < r; ++i) *why += (i ? "," : "") + a.label(args[i]);
            *why += ")";
          }
          return false;
        }
      }
      if (r == 0 && a.size() == 0) {
        // unreachable: constants force a nonempty carrier
      }
    }
    return true;
  }

  const FiniteAlgebra& source() const { return source_; }
  const FiniteAlgebra& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  Element operator()(Element e) const { return map_[e]; }

  bool is_surjective() const {
    std::vector<bool> hit(target_.size(), false);
    for (int v : map_) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_injective() const {
    std::vector<bool> hit(target_.size(), false);
    for (int v : map_) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }

  bool is_bijective() const { return source_.size() == target_.size() && is_injective(); }

 private:
  FiniteAlgebra source_;
  FiniteAlgebra target_;
  std::vector<int> map_;
};

inline Homomorphism identity_hom(const FiniteAlgebra& a) {
  std::vector<int> m(a.size());
  std::iota(m.begin(), m.end(), 0);
  return Homomorphism(a, a, std::move(m));
}

/// g after f.
inline Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!f.target().same_structure(g.source()))
    throw std::invalid_argument("compose: codomain/domain mismatch");
  std::vector<int> m(f.source().size());
  for (int i = 0; i < f.source().size(); ++i) m[i] = g(f(i));
  return Homomorphism(f.source(), g.target(), std::move(m));
}

/// All homomorphisms A -> B, enumerated by backtracking over the carrier in
/// index order. Exponential; intended for oracles on desk-scale carriers.
inline std::vector<Homomorphism> enumerate_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<Homomorphism> out;
  std::vector<int> map(a.size(), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == a.size()) {
      if (Homomorphism::commutes(a, b, map)) out.emplace_back(a, b, map);
      return;
    }
    for (int v = 0; v < b.size(); ++v) {
      map[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace ualg
