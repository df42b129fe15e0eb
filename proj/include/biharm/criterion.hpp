#pragma once

#include <string>

#include "biharm/curvature.hpp"

namespace biharm {

struct CriterionPolynomial {
  /// Monic squarefree common zero set of the vector criterion, poles removed.
  Poly poly;
  /// Product of the pole factors removed from poly.
  Poly excluded_poles;
  /// The assembled vector left-hand side.
  TrigRationalFn lhs;
  /// The criterion holds at every point of the edge.
  bool identically_zero = false;
  ActionKind action = ActionKind::Hermann;
  std::string edge_label;
};

/// sum m<tau,lambda>(1-cot^2)lambda + sum n<tau,alpha>(1-tan^2)alpha.
CriterionPolynomial hermann_criterion(const SymmetricTriad& triad, const EdgeParam& edge, const TensionField& tf);
/// As hermann_criterion with 3/2 in place of 1, plus the singular-root terms (asserted to vanish).
CriterionPolynomial group_criterion(const SymmetricTriad& triad, const EdgeParam& edge, const TensionField& tf);
CriterionPolynomial build_criterion(const SymmetricTriad& triad, const EdgeParam& edge, const TensionField& tf,
                                    ActionKind action);
/// crit.poly / gcd(crit.poly, harm): the proper-biharmonic candidates.
Poly proper_part(const CriterionPolynomial& crit, const Poly& harm);

}  // namespace biharm
