#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ualg/coequalizer.hpp"
#include "ualg/congruence.hpp"
#include "ualg/constructions.hpp"
#include "ualg/homomorphism.hpp"

namespace ualg {

/// A split epimorphism with a chosen section: p: total -> base with
/// p o s = 1. Validated eagerly, so invalid points are unrepresentable.
struct Point {
  FiniteAlgebra total;
  FiniteAlgebra base;
  Homomorphism p;  // total -> base
  Homomorphism s;  // base -> total

  Point(FiniteAlgebra total_, FiniteAlgebra base_, Homomorphism p_, Homomorphism s_)
      : total(std::move(total_)), base(std::move(base_)), p(std::move(p_)), s(std::move(s_)) {
    if (!p.source().same_structure(total) || !p.target().same_structure(base) ||
        !s.source().same_structure(base) || !s.target().same_structure(total))
      throw std::invalid_argument("point: structure maps do not match total/base");
    for (Element x = 0; x < base.size(); ++x)
      if (p(s(x)) != x) throw std::invalid_argument("point: section is not split (p o s != id)");
  }

  bool same_base(const Point& other) const { return base.same_structure(other.base); }
};

/// A morphism of points over a common base: a homomorphism between totals
/// commuting with the projections and sections.
struct PointMorphism {
  Point from;
  Point to;
  Homomorphism f;  // from.total -> to.total

  PointMorphism(Point from_, Point to_, Homomorphism f_)
      : from(std::move(from_)), to(std::move(to_)), f(std::move(f_)) {
    if (!from.same_base(to)) throw std::invalid_argument("point morphism: base mismatch");
    if (!f.source().same_structure(from.total) || !f.target().same_structure(to.total))
      throw std::invalid_argument("point morphism: map does not match totals");
    for (Element a = 0; a < from.total.size(); ++a)
      if (to.p(f(a)) != from.p(a)) throw std::invalid_argument("point morphism: projection square fails");
    for (Element x = 0; x < from.base.size(); ++x)
      if (f(from.s(x)) != to.s(x)) throw std::invalid_argument("point morphism: section triangle fails");
  }

  Element operator()(Element a) const { return f(a); }
};

/// The zero object of the points over X: (X, 1, 1).
inline Point pt_zero(const FiniteAlgebra& x) { return Point(x, x, identity_hom(x), identity_hom(x)); }

/// The zero morphism between two points over the same base: t o p.
inline PointMorphism pt_zero_morphism(const Point& from, const Point& to) {
  if (!from.same_base(to)) throw std::invalid_argument("pt_zero_morphism: base mismatch");
  return PointMorphism(from, to, compose(to.s, from.p));
}

struct PtProductResult {
  PullbackAlgebra carrier;  // pairs (a, b) with p(a) = q(b)
  Point point;
  PointMorphism pi1;
  PointMorphism pi2;
};

/// Binary product in the points over X: the pullback of the projections,
/// with structure map down to X and section (s, t).
inline PtProductResult pt_product(const Point& p1, const Point& p2) {
  if (!p1.same_base(p2)) throw std::invalid_argument("pt_product: base mismatch");
  PullbackAlgebra pb = pullback(p1.p, p2.p);

  std::vector<int> down(pb.algebra.size());
  for (int i = 0; i < pb.algebra.size(); ++i) down[i] = p1.p(pb.pairs[i].first);
  Homomorphism d(pb.algebra, p1.base, std::move(down));

  std::vector<int> sect(p1.base.size());
  for (Element x = 0; x < p1.base.size(); ++x) {
    const int idx = pb.index_of(p1.s(x), p2.s(x));
    if (idx < 0) throw std::logic_error("pt_product: section pair missing from pullback");
    sect[x] = idx;
  }
  Homomorphism st(p1.base, pb.algebra, std::move(sect));

  Point prod(pb.algebra, p1.base, d, st);
  PointMorphism m1(prod, p1, pb.p1);
  PointMorphism m2(prod, p2, pb.p2);
  return {std::move(pb), std::move(prod), std::move(m1), std::move(m2)};
}

/// A parallel pair of point morphisms.
struct PtParallelPair {
  PointMorphism u;
  PointMorphism v;

  PtParallelPair(PointMorphism u_, PointMorphism v_) : u(std::move(u_)), v(std::move(v_)) {
    if (!u.from.total.same_structure(v.from.total) || !u.to.total.same_structure(v.to.total) ||
        !u.from.same_base(v.from))
      throw std::invalid_argument("pt parallel pair: morphisms must be parallel");
  }
};

struct PtCoequalizerResult {
  Point point;          // quotient with its inherited point structure
  PointMorphism q;      // the coequalizing morphism
  Congruence congruence;
};

/// Coequalizers of points are computed on the underlying algebras; the
/// quotient carries a unique point structure making q a point morphism.
inline PtCoequalizerResult pt_coequalizer(const PtParallelPair& pair) {
  const Point& target = pair.u.to;
  ParallelPair underlying(pair.u.f, pair.v.f);
  auto coeq = coequalizer(underlying);

  // induced projection: pbar(q(a)) = p(a), well defined since p merges u, v
  std::vector<int> pbar(coeq.quotient.size(), -1);
  for (Element a = 0; a < target.total.size(); ++a) pbar[coeq.q(a)] = target.p(a);
  Homomorphism down(coeq.quotient, target.base, std::move(pbar));
  Homomorphism sect = compose(coeq.q, target.s);

  Point qpt(coeq.quotient, target.base, std::move(down), std::move(sect));
  PointMorphism qmor(target, qpt, coeq.q);
  return {std::move(qpt), std::move(qmor), std::move(coeq.congruence)};
}

/// Least pair separating Eq(f) from the congruence generated by pairing
/// each zero-locus element a (those with f(a) = t(p(a))) with its zero
/// image s(p(a)). Empty exactly when f is normal in the points over X.
inline std::optional<std::pair<Element, Element>> pt_normality_gap(const PointMorphism& m) {
  if (!m.f.is_surjective()) throw std::invalid_argument("pt_is_normal_epi: map is not surjective");
  std::vector<std::pair<Element, Element>> gens;
  for (Element a = 0; a < m.from.total.size(); ++a)
    if (m.f(a) == m.to.s(m.to.p(m.f(a))))  // f(a) lies on the zero section
      gens.emplace_back(a, m.from.s(m.from.p(a)));
  const auto cg = congruence_generated(m.from.total, gens).first;
  const auto eq = kernel_congruence(m.f);
  for (Element x = 0; x < m.from.total.size(); ++x)
    for (Element y = x + 1; y < m.from.total.size(); ++y)
      if (eq.related(x, y) && !cg.related(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

inline bool pt_is_normal_epi(const PointMorphism& m) { return !pt_normality_gap(m).has_value(); }

/// Product/coequalizer commutation inside the points over X: the pullback
/// product of two point coequalizers must be the coequalizer of the
/// product pair, compared by kernel congruences on the pullback carrier.
inline CommutationResult check_local_P_instance(const PtParallelPair& pair1, const PtParallelPair& pair2) {
  if (!pair1.u.from.same_base(pair2.u.from))
    throw std::invalid_argument("check_local_P_instance: base mismatch");
  const auto q1 = pt_coequalizer(pair1);
  const auto q2 = pt_coequalizer(pair2);

  const auto target_prod = pt_product(pair1.u.to, pair2.u.to);
  const auto source_prod = pt_product(pair1.u.from, pair2.u.from);

  std::vector<std::pair<Element, Element>> gens;
  gens.reserve(source_prod.carrier.pairs.size());
  for (const auto& [c, d] : source_prod.carrier.pairs) {
    const int l = target_prod.carrier.index_of(pair1.u(c), pair2.u(d));
    const int r = target_prod.carrier.index_of(pair1.v(c), pair2.v(d));
    if (l < 0 || r < 0) throw std::logic_error("check_local_P_instance: image pair missing from pullback");
    gens.emplace_back(l, r);
  }
  auto generated = congruence_generated(target_prod.carrier.algebra, gens).first;

  const int n = target_prod.carrier.algebra.size();
  std::vector<int> raw(n);
  std::vector<int> first(static_cast<std::size_t>(q1.point.total.size()) * q2.point.total.size(), -1);
  for (int i = 0; i < n; ++i) {
    const auto [a, b] = target_prod.carrier.pairs[i];
    const int key = q1.q(a) * q2.point.total.size() + q2.q(b);
    if (first[key] < 0) first[key] = i;
    raw[i] = first[key];
  }
  return detail::compare_generated_vs_kernel(target_prod.carrier.algebra, std::move(generated),
                                             Partition::from_representatives(std::move(raw)));
}

/// All point morphisms between two points, by filtering homomorphisms of
/// the totals. Enumeration oracle for universal-property tests.
inline std::vector<PointMorphism> enumerate_point_morphisms(const Point& from, const Point& to) {
  std::vector<PointMorphism> out;
  if (!from.same_base(to)) return out;
  for (const auto& h : enumerate_homomorphisms(from.total, to.total)) {
    bool ok = true;
    for (Element a = 0; a < from.total.size() && ok; ++a)
      if (to.p(h(a)) != from.p(a)) ok = false;
    for (Element x = 0; x < from.base.size() && ok; ++x)
      if (h(from.s(x)) != to.s(x)) ok = false;
    if (ok) out.emplace_back(from, to, h);
  }
  return out;
}

}  // namespace ualg
