#include "biharm/trig.hpp"

namespace biharm {

RationalFn cot_multiple(long j) {
  if (j < 1) throw AlgebraError("cot_multiple needs j >= 1");
  const RationalFn c(Poly::var());
  RationalFn cur = c;
  for (long k = 1; k < j; ++k) cur = (cur * c - RationalFn::constant(1)) / (cur + c);
  return cur;
}

RationalFn tan_multiple(long j) { return cot_multiple(j).reciprocal(); }

RationalFn eval_trig_term(const TrigTerm& term) {
  const AngleForm& a = term.angle;
  bool odd_offset = a.halfpi_k % 2 != 0;
  if (a.quarter) {
    // cot and tan both equal 1 at pi/4 and -1 at 3pi/4.
    if (a.step_j == 0) return RationalFn::constant(odd_offset ? -1 : 1);
    // cot(pi/4 + x) = (cot x - 1)/(cot x + 1), tan(pi/4 + x) = (cot x + 1)/(cot x - 1).
    RationalFn c = eval_trig_term(TrigTerm{TrigKind::Cot, AngleForm{a.halfpi_k, a.step_j}});
    RationalFn minus = c - RationalFn::constant(1), plus = c + RationalFn::constant(1);
    return term.kind == TrigKind::Cot ? minus / plus : plus / minus;
  }
  if (a.step_j == 0) {
    bool vanishes = term.kind == TrigKind::Cot ? odd_offset : !odd_offset;
    if (!vanishes) throw AlgebraError("singular term reached evaluator");
    return RationalFn();
  }
  long j = a.step_j < 0 ? -a.step_j : a.step_j;
  // cot(k pi/2 + x) = cot x (k even), -tan x (k odd); tan dually.
  RationalFn base;
  if (term.kind == TrigKind::Cot)
    base = odd_offset ? -tan_multiple(j) : cot_multiple(j);
  else
    base = odd_offset ? -cot_multiple(j) : tan_multiple(j);
  return a.step_j < 0 ? -base : base;
}

bool TrigRationalFn::is_zero() const {
  for (const auto& f : comps_)
    if (!f.is_zero()) return false;
  return true;
}

void TrigRationalFn::add(const RationalFn& coeff, const RootVector& direction) {
  for (size_t i = 0; i < comps_.size(); ++i)
    if (direction[i] != 0) comps_[i] += direction[i] * coeff;
}

RationalFn TrigRationalFn::pair(const SymmetricTriad& triad, const RootVector& v) const {
  RationalFn s;
  for (int i = 0; i < rank(); ++i) {
    Rational w = 0;
    for (int j = 0; j < rank(); ++j) w += triad.gram[i][j] * v[j];
    if (w != 0) s += w * comps_[i];
  }
  return s;
}

RationalFn TrigRationalFn::norm2(const SymmetricTriad& triad) const {
  RationalFn s;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (triad.gram[i][j] != 0) s += triad.gram[i][j] * (comps_[i] * comps_[j]);
  return s;
}

Poly TrigRationalFn::poles() const {
  Poly acc = Poly::constant(1);
  for (const auto& f : comps_) {
    if (f.den().is_constant()) continue;
    Poly d = squarefree_part(f.den());
    acc = exact_div(acc * d, poly_gcd(acc, d));
  }
  return acc.monic();
}

std::vector<double> TrigRationalFn::eval(double c) const {
  std::vector<double> out;
  for (const auto& f : comps_) out.push_back(f.eval(c));
  return out;
}

std::string TrigRationalFn::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < comps_.size(); ++i) s += (i ? ", " : "") + comps_[i].to_string();
  return s + "]";
}

TrigRationalFn combine(const std::vector<WeightedTerm>& terms, int rank) {
  TrigRationalFn out(rank);
  for (const auto& t : terms) {
    if (t.edge != terms.front().edge) throw AlgebraError("mixed edges");
    if (static_cast<int>(t.direction.size()) != rank) throw AlgebraError("direction does not match rank");
    out.add(t.coeff * eval_trig_term(t.term), t.direction);
  }
  return out;
}

}  // namespace biharm
