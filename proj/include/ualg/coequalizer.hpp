#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ualg/congruence.hpp"
#include "ualg/constructions.hpp"
#include "ualg/homomorphism.hpp"

namespace ualg {

/// Two homomorphisms with a common source and target.
struct ParallelPair {
  Homomorphism u;
  Homomorphism v;

  ParallelPair(Homomorphism u_, Homomorphism v_) : u(std::move(u_)), v(std::move(v_)) {
    if (!u.source().same_structure(v.source()) || !u.target().same_structure(v.target()))
      throw std::invalid_argument("parallel pair: maps must share source and target");
  }

  std::vector<std::pair<Element, Element>> image_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    out.reserve(u.source().size());
    for (Element c = 0; c < u.source().size(); ++c) out.emplace_back(u(c), v(c));
    return out;
  }
};

struct CoequalizerResult {
  FiniteAlgebra quotient;
  Homomorphism q;
  Congruence congruence;
};

/// Coequalizer of a parallel pair: the quotient by the congruence generated
/// by all pairs (u(c), v(c)).
inline CoequalizerResult coequalizer(const ParallelPair& p) {
  auto [cong, trace] = congruence_generated(p.u.target(), p.image_pairs());
  auto [quot, q] = quotient(p.u.target(), cong);
  return {std::move(quot), std::move(q), std::move(cong)};
}

/// The congruence a normal epimorphism must induce: everything in the
/// zero fibre paired with the zero element.
inline Congruence zero_fibre_congruence(const Homomorphism& f) {
  const Element z_src = f.source().require_pointed_zero("is_normal_epi");
  const Element z_tgt = f.target().require_pointed_zero("is_normal_epi");
  std::vector<std::pair<Element, Element>> gens;
  for (Element k = 0; k < f.source().size(); ++k)
    if (f(k) == z_tgt) gens.emplace_back(k, z_src);
  return congruence_generated(f.source(), gens).first;
}

/// Least pair separating Eq(f) from the zero-fibre congruence, if any.
/// Empty exactly when f is a normal epimorphism.
inline std::optional<std::pair<Element, Element>> normality_gap(const Homomorphism& f) {
  if (!f.is_surjective()) throw std::invalid_argument("is_normal_epi: map is not surjective (not epi)");
  const Congruence eq = kernel_congruence(f);
  const Congruence cg = zero_fibre_congruence(f);
  for (Element x = 0; x < f.source().size(); ++x)
    for (Element y = x + 1; y < f.source().size(); ++y)
      if (eq.related(x, y) && !cg.related(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

/// A surjection between pointed algebras is a normal epimorphism iff its
/// kernel congruence is generated by the zero fibre paired with zero.
inline bool is_normal_epi(const Homomorphism& f) { return !normality_gap(f).has_value(); }

/// Cokernel of f: the quotient of the target by the congruence generated
/// by the image of f paired with zero.
inline CoequalizerResult cokernel(const Homomorphism& f) {
  const Element z = f.target().require_pointed_zero("cokernel");
  std::vector<std::pair<Element, Element>> gens;
  for (Element a = 0; a < f.source().size(); ++a) gens.emplace_back(f(a), z);
  auto cong = congruence_generated(f.target(), gens).first;
  auto [quot, q] = quotient(f.target(), cong);
  return {std::move(quot), std::move(q), std::move(cong)};
}

/// Outcome of comparing a generated congruence against a kernel congruence
/// on the same carrier. The generated side is always contained in the
/// kernel side, so a failure witness is a kernel-related pair the generated
/// congruence misses (lexicographically least).
struct CommutationResult {
  bool ok = true;
  std::optional<std::pair<Element, Element>> witness;
  FiniteAlgebra carrier;           // where the comparison happened
  Congruence generated;            // Cg of the product pair images
  Partition kernel;                // Eq of the product of the coequalizers
};

namespace detail {

inline CommutationResult compare_generated_vs_kernel(FiniteAlgebra carrier, Congruence generated,
                                                     Partition kernel) {
  CommutationResult res{true, std::nullopt, std::move(carrier), std::move(generated), std::move(kernel)};
  const int n = res.carrier.size();
  for (Element x = 0; x < n && res.ok; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (res.kernel.related(x, y) && !res.generated.related(x, y)) {
        res.ok = false;
        res.witness = {x, y};
        break;
      }
  return res;
}

}  // namespace detail

/// Instance-wise product/coequalizer commutation: the coequalizer of
/// u x u', v x v' must have kernel congruence Eq(q1 x q2). A failure
/// witness is a pair identified by q1 x q2 but not by the generated
/// congruence.
inline CommutationResult check_P_instance(const ParallelPair& p1, const ParallelPair& p2) {
  if (p1.u.target().signature() != p2.u.target().signature())
    throw std::invalid_argument("check_P_instance: signature mismatch");
  const auto q1 = coequalizer(p1);
  const auto q2 = coequalizer(p2);
  const auto prod = product(p1.u.target(), p2.u.target());
  const int nb = p2.u.target().size();

  std::vector<std::pair<Element, Element>> gens;
  for (Element c = 0; c < p1.u.source().size(); ++c)
    for (Element d = 0; d < p2.u.source().size(); ++d)
      gens.emplace_back(p1.u(c) * nb + p2.u(d), p1.v(c) * nb + p2.v(d));
  auto generated = congruence_generated(prod.algebra, gens).first;

  std::vector<int> raw(prod.algebra.size());
  std::vector<int> first(static_cast<std::size_t>(q1.quotient.size()) * q2.quotient.size(), -1);
  for (Element e = 0; e < prod.algebra.size(); ++e) {
    const int key = q1.q(e / nb) * q2.quotient.size() + q2.q(e % nb);
    if (first[key] < 0) first[key] = e;
    raw[e] = first[key];
  }
  return detail::compare_generated_vs_kernel(prod.algebra, std::move(generated),
                                             Partition::from_representatives(std::move(raw)));
}

/// Zero-trick reduction: q x 1_B must be the coequalizer of the pair
/// (u, 0), (v, 0) into X x B.
inline CommutationResult check_P_zero_trick(const ParallelPair& p, const FiniteAlgebra& b) {
  const Element zb = b.require_pointed_zero("check_P_zero_trick");
  p.u.target().require_pointed_zero("check_P_zero_trick");
  const auto q = coequalizer(p);
  const auto prod = product(p.u.target(), b);
  const int nb = b.size();

  std::vector<std::pair<Element, Element>> gens;
  for (Element c = 0; c < p.u.source().size(); ++c)
    gens.emplace_back(p.u(c) * nb + zb, p.v(c) * nb + zb);
  auto generated = congruence_generated(prod.algebra, gens).first;

  std::vector<int> raw(prod.algebra.size());
  std::vector<int> first(static_cast<std::size_t>(q.quotient.size()) * nb, -1);
  for (Element e = 0; e < prod.algebra.size(); ++e) {
    const int key = q.q(e / nb) * nb + (e % nb);
    if (first[key] < 0) first[key] = e;
    raw[e] = first[key];
  }
  return detail::compare_generated_vs_kernel(prod.algebra, std::move(generated),
                                             Partition::from_representatives(std::move(raw)));
}

/// Full universal-property oracle by morphism enumeration: every h with
/// h∘u = h∘v into the probe algebra must factor through q exactly once.
/// Exponential in carrier sizes; intended for tests and small fixtures.
inline bool verify_coequalizer_universal(const ParallelPair& p, const Homomorphism& q,
                                         const FiniteAlgebra& probe) {
  const auto from_x = enumerate_homomorphisms(p.u.target(), probe);
  const auto from_q = enumerate_homomorphisms(q.target(), probe);
  for (const auto& h : from_x) {
    bool coequalizes = true;
    for (Element c = 0; c < p.u.source().size() && coequalizes; ++c)
      if (h(p.u(c)) != h(p.v(c))) coequalizes = false;
    if (!coequalizes) continue;
    int factorizations = 0;
    for (const auto& k : from_q) {
      bool match = true;
      for (Element x = 0; x < p.u.target().size() && match; ++x)
        if (k(q(x)) != h(x)) match = false;
      if (match) ++factorizations;
    }
    if (factorizations != 1) return false;
  }
  return true;
}

/// Diagram data for the composite-coequalizer law: with e1 a coequalizer of
/// (u∘i1, v∘i1), e2 a coequalizer of (e1∘u∘i2, e1∘v∘i2), and e2∘e1
/// merging u with v, the composite e2∘e1 is a coequalizer of (u, v).
struct ComposeCoequalizersConfig {
  Homomorphism i1;  // D1 -> C
  Homomorphism i2;  // D2 -> C
  Homomorphism u;   // C -> X
  Homomorphism v;   // C -> X
  Homomorphism e1;  // X -> X1
  Homomorphism e2;  // X1 -> X2
};

struct ComposeCoequalizersResult {
  bool hyp_e1_coequalizes = false;
  bool hyp_e2_coequalizes = false;
  bool hyp_composite_merges = false;
  bool conclusion = false;
  bool universal_checked = false;

  bool hypotheses() const { return hyp_e1_coequalizes && hyp_e2_coequalizes && hyp_composite_merges; }
};

inline bool is_coequalizer_of(const ParallelPair& p, const Homomorphism& q) {
  if (!q.is_surjective()) return false;
  const auto cong = congruence_generated(q.source(), p.image_pairs()).first;
  return kernel_congruence(q).partition() == cong.partition();
}

inline ComposeCoequalizersResult compose_coequalizers_check(const ComposeCoequalizersConfig& cfg,
                                                            int universal_size_cap = 5) {
  ComposeCoequalizersResult res;
  const ParallelPair restricted1(compose(cfg.u, cfg.i1), compose(cfg.v, cfg.i1));
  res.hyp_e1_coequalizes = is_coequalizer_of(restricted1, cfg.e1);
  const ParallelPair restricted2(compose(cfg.e1, compose(cfg.u, cfg.i2)),
                                 compose(cfg.e1, compose(cfg.v, cfg.i2)));
  res.hyp_e2_coequalizes = is_coequalizer_of(restricted2, cfg.e2);
  const Homomorphism composite = compose(cfg.e2, cfg.e1);
  res.hyp_composite_merges = compose(composite, cfg.u).map() == compose(composite, cfg.v).map();
  if (!res.hypotheses()) return res;

  const ParallelPair full(cfg.u, cfg.v);
  res.conclusion = is_coequalizer_of(full, composite);
  if (res.conclusion && composite.target().size() <= universal_size_cap) {
    res.universal_checked = true;
    res.conclusion = verify_coequalizer_universal(full, composite, composite.target());
  }
  return res;
}

}  // namespace ualg
