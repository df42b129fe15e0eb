#pragma once

#include <string>
#include <vector>

#include "biharm/classifier.hpp"

namespace biharm {

struct NumericProfile {
  int grid_n = 20000;
  double bisect_tol = 1e-12;
  /// Fraction of the psi-domain kept away from each endpoint.
  double boundary_margin = 1e-6;

  void check() const;
};

enum class NumericFn { TensionNorm2, HermannCriterionNorm2, GroupCriterionNorm2 };

/// tau at psi by direct summation of cot/tan of the actual angles.
std::vector<double> eval_tension_numeric(const SymmetricTriad& triad, const EdgeParam& edge, double psi,
                                         ActionKind action, const NumericProfile& profile = {});
/// Criterion left-hand side at psi by direct summation.
std::vector<double> eval_criterion_numeric(const SymmetricTriad& triad, const EdgeParam& edge, double psi,
                                           ActionKind action, const NumericProfile& profile = {});

struct NumericRoot {
  double psi = 0;
  double residual = 0;
  /// Found as a local minimum of |f| rather than a sign change.
  bool tangential = false;
};

std::vector<NumericRoot> find_roots_numeric(NumericFn fn, const SymmetricTriad& triad, const EdgeParam& edge,
                                            const NumericProfile& profile = {});

struct CrossCheckReport {
  bool match = false;
  std::size_t exact_count = 0;
  std::size_t numeric_count = 0;
  std::vector<double> deltas;
  double max_delta = 0;
  std::string diagnostics;
};

/// Compares proper and harmonic roots of an exact result against the oracle.
CrossCheckReport cross_check(const ClassificationResult& exact, const SymmetricTriad& triad,
                             const NumericProfile& profile = {});

}  // namespace biharm
