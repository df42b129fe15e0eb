#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biharm/catalog.hpp"
#include "biharm/criterion.hpp"
#include "biharm/curvature.hpp"
#include "biharm/strata.hpp"

namespace biharm {

/// i: unique proper orbit, ii: exactly two, iii: biharmonic implies harmonic.
enum class Category { I, II, III, Other };

std::string to_string(Category c);
Category category_from_count(std::size_t proper_count);

/// Exact value of a root in a reduced variable such as cot^2(psi).
struct ClosedForm {
  std::string variable;
  QuadraticSurd value;
  std::string to_string() const;
};

struct RootInfo {
  RootInterval c_interval;
  double c = 0;
  /// psi in radians and as a fraction of pi.
  double psi = 0;
  double psi_over_pi = 0;
  std::optional<ClosedForm> closed_form;
};

/// A polynomial rewritten as a quadratic (or lower) in one of c, cot^2 psi, cot 2psi, cot^2 2psi.
struct ReducedForm {
  std::string variable;
  Poly poly;
  std::vector<QuadraticRoot> roots;
  /// Maps c to the reduced variable.
  double map(double c) const;
  int level = 0;
  bool squared = false;
};

std::optional<ReducedForm> reduce_to_quadratic(const Poly& p);

struct ClassificationResult {
  std::string family;
  std::string type;
  TriadKind kind = TriadKind::Isotropy;
  int rank = 0;
  Params params;
  std::string edge_label;
  int edge_index = 0;
  ActionKind action = ActionKind::Hermann;
  Rational base_scale;
  std::string psi_domain;
  Interval c_domain;

  Category category = Category::III;
  bool all_harmonic = false;
  bool all_biharmonic = false;
  Poly harmonic_poly;
  Poly criterion_poly;
  Poly proper_poly;
  std::optional<ReducedForm> proper_reduced;
  std::vector<RootInfo> proper_roots;
  std::vector<RootInfo> harmonic_roots;
  /// A harmonic root lies strictly between the two proper roots.
  std::optional<bool> interleaved;
  std::optional<long> codim;
  std::string multiplicities;
  std::string source;
  std::string note;
};

ClassificationResult classify_family(const SymmetricTriad& triad, const Stratum& edge, ActionKind action);
/// Attaches codim, multiplicity label and source from the entry.
ClassificationResult classify_family(const CatalogEntry& entry, const Params& params, const Stratum& edge,
                                     ActionKind action);
/// Recomputes proper roots and category from a replacement proper polynomial.
ClassificationResult reclassify_with(const ClassificationResult& base, const Poly& proper);

/// Rank-2 families use the hermann criterion edge by edge; rank-1 families use the given action.
std::vector<ClassificationResult> classify_entry(const CatalogEntry& entry, const Params& params, ActionKind action);

struct SuiteSelection {
  std::optional<int> rank;
  std::optional<TriadKind> kind;
};

/// One result per (family, edge) at default parameters, in catalog order; families run in parallel.
std::vector<ClassificationResult> classify_all(const Catalog& catalog, ActionKind action,
                                               const SuiteSelection& selection = {});

struct Regime {
  long lo = 0;
  long hi = 0;
  Category category = Category::III;
};

struct ThresholdReport {
  std::string family;
  std::string param;
  ActionKind action = ActionKind::Group;
  std::string edge_label;
  /// Discriminant of the monic reduced quadratic as num/den in the parameter; absent when not quadratic.
  std::optional<RationalFn> discriminant;
  /// Real roots of num*den, ascending.
  std::vector<double> thresholds;
  std::vector<std::string> threshold_forms;
  /// Integers where the discriminant vanishes.
  std::vector<long> degenerate_points;
  std::vector<Regime> regimes;
  std::vector<std::pair<long, Category>> per_integer;
  /// Every integer strictly between consecutive thresholds has the same category.
  bool consistent = true;
  std::string note;
};

/// Exhaustive classification over [lo, hi] plus an exact discriminant analysis of the reduced quadratic.
ThresholdReport threshold_scan(const CatalogEntry& entry, const std::string& param, long lo, long hi,
                               ActionKind action, const Params& fixed = {}, const std::string& edge = "1");

}  // namespace biharm
