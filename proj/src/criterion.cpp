#include "biharm/criterion.hpp"

namespace biharm {

namespace {

CriterionPolynomial assemble(const SymmetricTriad& triad, const EdgeParam& edge, const TensionField& tf,
                             const Rational& base, ActionKind action) {
  TrigRationalFn lhs(triad.rank);
  TrigRationalFn extra(triad.rank);
  const RationalFn one = RationalFn::constant(base);
  for (size_t i = 0; i < triad.sigma_plus.size(); ++i) {
    const RootVector& lam = triad.sigma_plus[i];
    RationalFn p = tf.fn.pair(triad, lam);
    if (edge.sigma_singular[i]) {
      extra.add(Rational(triad.m[i]) * p, lam);
      continue;
    }
    RationalFn cot = eval_trig_term({TrigKind::Cot, edge.sigma_angles[i]});
    lhs.add(Rational(triad.m[i]) * (p * (one - cot * cot)), lam);
  }
  for (size_t i = 0; i < triad.w_plus.size(); ++i) {
    const RootVector& alpha = triad.w_plus[i];
    RationalFn q = tf.fn.pair(triad, alpha);
    if (edge.w_singular[i]) {
      extra.add(Rational(triad.n[i]) * q, alpha);
      continue;
    }
    RationalFn tan = eval_trig_term({TrigKind::Tan, edge.w_angles[i]});
    lhs.add(Rational(triad.n[i]) * (q * (one - tan * tan)), alpha);
  }
  if (action == ActionKind::Group && !extra.is_zero())
    throw AlgebraError("singular-root terms of the group criterion do not vanish");

  CriterionPolynomial out;
  out.lhs = lhs;
  out.action = action;
  out.edge_label = edge.stratum.label();
  out.excluded_poles = Poly::constant(1);
  if (lhs.is_zero()) {
    out.identically_zero = true;
    out.poly = Poly();
    return out;
  }
  Poly g;
  for (const auto& f : lhs.components())
    if (!f.is_zero()) g = g.is_zero() ? f.num() : poly_gcd(g, f.num());
  // Points where tau or the criterion is undefined are never solutions.
  Poly poles = lhs.poles();
  Poly tp = tf.fn.poles();
  poles = exact_div(poles * tp, poly_gcd(poles, tp));
  Poly removed = Poly::constant(1);
  for (;;) {
    Poly h = poly_gcd(g, poles);
    if (h.is_constant()) break;
    g = exact_div(g, h);
    removed = removed * h;
  }
  out.excluded_poles = removed.is_constant() ? removed : squarefree_part(removed);
  out.poly = g.is_constant() ? Poly::constant(1) : squarefree_part(g);
  return out;
}

}  // namespace

CriterionPolynomial hermann_criterion(const SymmetricTriad& triad, const EdgeParam& edge, const TensionField& tf) {
  return assemble(triad, edge, tf, Rational(1), ActionKind::Hermann);
}

CriterionPolynomial group_criterion(const SymmetricTriad& triad, const EdgeParam& edge, const TensionField& tf) {
  return assemble(triad, edge, tf, Rational(3, 2), ActionKind::Group);
}

CriterionPolynomial build_criterion(const SymmetricTriad& triad, const EdgeParam& edge, const TensionField& tf,
                                    ActionKind action) {
  return action == ActionKind::Hermann ? hermann_criterion(triad, edge, tf) : group_criterion(triad, edge, tf);
}

Poly proper_part(const CriterionPolynomial& crit, const Poly& harm) {
  if (crit.identically_zero) throw AlgebraError("criterion vanishes identically");
  if (crit.poly.is_constant()) return Poly::constant(1);
  Poly g = poly_gcd(crit.poly, harm.is_zero() ? Poly::constant(1) : harm);
  return exact_div(crit.poly, g).monic();
}

}  // namespace biharm
