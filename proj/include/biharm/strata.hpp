#pragma once

#include <string>
#include <vector>

#include "biharm/catalog.hpp"
#include "biharm/exact.hpp"

namespace biharm {

class StrataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The angle k*(pi/2) + j*psi, plus pi/4 when quarter is set.
struct AngleForm {
  long halfpi_k = 0;
  long step_j = 0;
  bool quarter = false;

  bool is_constant() const { return step_j == 0; }
  double eval(double psi) const;
  std::string to_string() const;
  bool operator==(const AngleForm& o) const = default;
};

/// Closed fundamental cell: 0 < <lambda,H> for simple lambda and <top,H> < bound*pi.
struct Cell {
  std::vector<RootVector> simple;
  RootVector top;
  Rational top_bound;
  TriadKind kind = TriadKind::Isotropy;

  /// Open-cell membership of H given in a-coordinates.
  bool contains(const SymmetricTriad& triad, const std::vector<double>& h) const;
  std::string to_string() const;
};

/// Face of the closed cell; delta lists the inequalities kept strict ("a1", "a2", "delta"/"atilde", or "a" in rank 1).
struct Stratum {
  std::vector<std::string> delta;
  int dim = 0;
  /// 1..3 for rank-2 edges in table order, 1 for the rank-1 interior family, 0 otherwise.
  int edge_index = 0;

  std::string label() const;
};

/// Exact parametrization of a one-parameter family: psi = (psi_offset + base_scale*t)*pi for t in (0,1).
struct EdgeParam {
  Stratum stratum;
  Rational base_scale;
  /// Smallest shift making every constant angle a multiple of pi/2; zero unless the edge needs it.
  Rational psi_offset;
  std::vector<AngleForm> sigma_angles;
  std::vector<AngleForm> w_angles;
  std::vector<bool> sigma_singular;
  std::vector<bool> w_singular;
  /// c = cot psi over the psi domain.
  Interval c_domain;

  std::string psi_domain_string() const;
};

Cell build_cell(const SymmetricTriad& triad);
/// Every face of the closed cell with its dimension, vertices included.
std::vector<Stratum> all_strata(const SymmetricTriad& triad);
/// The one-dimensional strata: three edges in rank 2, the interior family in rank 1.
std::vector<Stratum> edges(const SymmetricTriad& triad);
/// Accepts "a1,delta" style labels (either order) or the index "1".."3".
Stratum find_edge(const SymmetricTriad& triad, const std::string& label);
EdgeParam parametrize_edge(const SymmetricTriad& triad, const Stratum& edge);

/// Exact cot(r*pi) for the rational multiples that occur (r in [0,1]); +inf for r = 0, -inf for r = 1.
Bound cot_of_pi_multiple(const Rational& r);

}  // namespace biharm
