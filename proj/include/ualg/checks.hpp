#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "ualg/congruence.hpp"
#include "ualg/constructions.hpp"

namespace ualg {

/// Result of a universally quantified congruence check: either it holds,
/// the stated precondition ruled the instance out, or the lexicographically
/// least violating tuple is reported.
template <std::size_t N>
struct CheckResult {
  bool applicable = true;
  std::optional<std::array<Element, N>> violation;

  bool holds() const { return applicable && !violation; }
};

/// Rectangle completion on a product congruence: (x,0) C (y,0) must force
/// (x,z) C (y,z). Witness order: (x, y, z).
inline CheckResult<3> egg_box_check(const FiniteAlgebra& a, const FiniteAlgebra& b, const Congruence& c) {
  const Element zb = b.require_pointed_zero("egg_box_check");
  a.require_pointed_zero("egg_box_check");
  if (c.size() != a.size() * b.size())
    throw std::invalid_argument("egg_box_check: congruence is not on the product carrier");
  const int nb = b.size();
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y) {
      if (!c.related(x * nb + zb, y * nb + zb)) continue;
      for (Element z = 0; z < nb; ++z)
        if (!c.related(x * nb + z, y * nb + z)) return {true, {{x, y, z}}};
    }
  return {};
}

/// Congruence-modularity shifting: with R `meet` S below T, the pattern
///  x R y, w R z, y S z, x S w, y T z  must force  x T w.
/// Skipped (not applicable) when the meet condition fails.
inline CheckResult<4> shifting_lemma_check(const FiniteAlgebra& alg, const Congruence& r,
                                           const Congruence& s, const Congruence& t) {
  if (!meet(r.partition(), s.partition()).refines(t.partition())) return {false, std::nullopt};
  const int n = alg.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!r.related(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!s.related(y, z) || !t.related(y, z)) continue;
        for (Element w = 0; w < n; ++w) {
          if (!r.related(w, z) || !s.related(x, w)) continue;
          if (!t.related(x, w)) return {true, {{x, y, z, w}}};
        }
      }
    }
  return {};
}

/// Weak shifting on a product A x B: for congruences R, S on the product
/// with Eq(pi1) `meet` R below S, the pattern
///  (a,c) R (d,f), (a,c) S (d,f), (a,b) R (d,e)
/// (vertical edges along Eq(pi1)) must force (a,b) S (d,e).
/// Witness order: (a, b, c, d, e, f).
inline CheckResult<6> weak_shifting_check(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                          const Congruence& r, const Congruence& s) {
  const int na = a.size(), nb = b.size();
  if (r.size() != na * nb || s.size() != na * nb)
    throw std::invalid_argument("weak_shifting_check: congruences must live on the product carrier");
  // Eq(pi1) as a partition: same first coordinate
  std::vector<int> raw(static_cast<std::size_t>(na) * nb);
  for (int i = 0; i < na * nb; ++i) raw[i] = (i / nb) * nb;
  const Partition eq_pi1 = Partition::from_representatives(std::move(raw));
  if (!meet(eq_pi1, r.partition()).refines(s.partition())) return {false, std::nullopt};

  for (Element av = 0; av < na; ++av)
    for (Element dv = 0; dv < na; ++dv)
      for (Element c = 0; c < nb; ++c)
        for (Element f = 0; f < nb; ++f) {
          const Element top_l = av * nb + c, top_r = dv * nb + f;
          if (!r.related(top_l, top_r) || !s.related(top_l, top_r)) continue;
          for (Element bv = 0; bv < nb; ++bv)
            for (Element e = 0; e < nb; ++e) {
              const Element bot_l = av * nb + bv, bot_r = dv * nb + e;
              if (!r.related(bot_l, bot_r)) continue;
              if (!s.related(bot_l, bot_r)) return {true, {{av, bv, c, dv, e, f}}};
            }
        }
  return {};
}

/// Local rectangle completion on a pullback: (x,u) C (y,u) must force
/// (x,v) C (y,v) whenever all four pairs lie in the pullback.
/// Witness order: (x, y, u, v).
inline CheckResult<4> local_egg_box_check(const PullbackAlgebra& pb, const Congruence& c) {
  const int n = pb.algebra.size();
  if (c.size() != n) throw std::invalid_argument("local_egg_box_check: congruence is not on the pullback carrier");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto [x, u] = pb.pairs[i];
      const auto [y, u2] = pb.pairs[j];
      if (u != u2 || !c.related(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        const auto [x2, v] = pb.pairs[k];
        if (x2 != x) continue;
        const int l = pb.index_of(y, v);
        if (l < 0) continue;
        if (!c.related(k, l)) return {true, {{x, y, u, v}}};
      }
    }
  return {};
}

}  // namespace ualg
