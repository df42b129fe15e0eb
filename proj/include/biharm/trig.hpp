#pragma once

#include <string>
#include <vector>

#include "biharm/catalog.hpp"
#include "biharm/exact.hpp"
#include "biharm/strata.hpp"

namespace biharm {

enum class TrigKind { Cot, Tan };

struct TrigTerm {
  TrigKind kind = TrigKind::Cot;
  AngleForm angle;
};

/// cot(j*psi) as a rational function of c = cot psi, j >= 1.
RationalFn cot_multiple(long j);
/// tan(j*psi) as a rational function of c, j >= 1.
RationalFn tan_multiple(long j);
/// Applies the pi/2 offset rules; a constant angle is accepted at odd multiples of pi/4 or where the function vanishes.
RationalFn eval_trig_term(const TrigTerm& term);

/// Vector of rational functions in c, one per a-coordinate.
class TrigRationalFn {
 public:
  TrigRationalFn() = default;
  explicit TrigRationalFn(int rank) : comps_(rank) {}
  explicit TrigRationalFn(std::vector<RationalFn> comps) : comps_(std::move(comps)) {}

  int rank() const { return static_cast<int>(comps_.size()); }
  const std::vector<RationalFn>& components() const { return comps_; }
  const RationalFn& operator[](int i) const { return comps_[i]; }
  bool is_zero() const;

  void add(const RationalFn& coeff, const RootVector& direction);
  /// <this, v> through the gram matrix.
  RationalFn pair(const SymmetricTriad& triad, const RootVector& v) const;
  RationalFn norm2(const SymmetricTriad& triad) const;
  /// Monic squarefree product of the distinct denominator factors.
  Poly poles() const;
  std::vector<double> eval(double c) const;
  bool operator==(const TrigRationalFn& o) const { return comps_ == o.comps_; }
  std::string to_string() const;

 private:
  std::vector<RationalFn> comps_;
};

struct WeightedTerm {
  Rational coeff;
  TrigTerm term;
  RootVector direction;
  std::string edge;
};

/// Sum of coeff * trig(term) * direction; all terms must carry the same edge tag.
TrigRationalFn combine(const std::vector<WeightedTerm>& terms, int rank);

}  // namespace biharm
