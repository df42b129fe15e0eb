#include "biharm/curvature.hpp"

#include <cmath>
#include <numbers>

namespace biharm {

namespace {

Poly strip_factors(Poly p, const Poly& poles) {
  if (poles.is_constant()) return p;
  for (;;) {
    Poly g = poly_gcd(p, poles);
    if (g.is_constant()) return p;
    p = exact_div(p, g);
  }
}

double pairing(const SymmetricTriad& t, const std::vector<double>& tau, const RootVector& r) {
  double s = 0;
  for (int i = 0; i < t.rank; ++i)
    for (int j = 0; j < t.rank; ++j) s += tau[i] * to_double(t.gram[i][j]) * to_double(r[j]);
  return s;
}

}  // namespace

std::string to_string(ActionKind a) { return a == ActionKind::Hermann ? "hermann" : "group"; }

TensionField tension_field(const SymmetricTriad& triad, const EdgeParam& edge, ActionKind) {
  std::vector<WeightedTerm> terms;
  const std::string tag = edge.stratum.label();
  for (size_t i = 0; i < triad.sigma_plus.size(); ++i) {
    if (edge.sigma_singular[i]) continue;
    terms.push_back({Rational(-triad.m[i]), {TrigKind::Cot, edge.sigma_angles[i]}, triad.sigma_plus[i], tag});
  }
  for (size_t i = 0; i < triad.w_plus.size(); ++i) {
    if (edge.w_singular[i]) continue;
    terms.push_back({Rational(triad.n[i]), {TrigKind::Tan, edge.w_angles[i]}, triad.w_plus[i], tag});
  }
  return {combine(terms, triad.rank), edge};
}

HarmonicPolynomial harmonic_polynomial(const TensionField& tf) {
  HarmonicPolynomial out;
  if (tf.fn.is_zero()) {
    out.all_harmonic = true;
    out.poly = Poly::constant(1);
    return out;
  }
  Poly g;
  for (const auto& f : tf.fn.components())
    if (!f.is_zero()) g = g.is_zero() ? f.num() : poly_gcd(g, f.num());
  g = strip_factors(g, tf.fn.poles());
  out.poly = g.is_constant() ? Poly::constant(1) : squarefree_part(g);
  return out;
}

double CurvatureSpectrum::trace() const {
  double s = 0;
  for (const auto& e : entries) s += e.eigenvalue * static_cast<double>(e.multiplicity);
  return s;
}

CurvatureSpectrum curvature_spectrum(const SymmetricTriad& triad, const EdgeParam& edge, double psi,
                                     ActionKind action) {
  TensionField tf = tension_field(triad, edge, action);
  const double c = std::cos(psi) / std::sin(psi);
  std::vector<double> tau = tf.fn.eval(c);
  for (double v : tau)
    if (!std::isfinite(v)) throw AlgebraError("tension field has a pole at this psi");

  CurvatureSpectrum out;
  auto add_block = [&](double diag, double coupling, long mult, const std::string& origin) {
    // eigenvalues of [[0, coupling], [coupling, diag]]
    double mid = diag / 2;
    double rad = std::sqrt(mid * mid + coupling * coupling);
    out.entries.push_back({mid + rad, mult, origin + " (S,T)+"});
    out.entries.push_back({mid - rad, mult, origin + " (S,T)-"});
  };

  for (size_t i = 0; i < triad.sigma_plus.size(); ++i) {
    if (edge.sigma_singular[i]) continue;
    double angle = edge.sigma_angles[i].eval(psi);
    double s = std::sin(angle);
    if (std::abs(s) < 1e-12) throw AlgebraError("cot pole at this psi");
    double cot = std::cos(angle) / s;
    double p = pairing(triad, tau, triad.sigma_plus[i]);
    std::string origin = "m " + root_to_string(triad.sigma_plus[i]);
    if (action == ActionKind::Hermann)
      out.entries.push_back({-p * cot, triad.m[i], origin});
    else
      add_block(-p * cot, -p / 2, triad.m[i], origin);
  }
  for (size_t i = 0; i < triad.w_plus.size(); ++i) {
    if (edge.w_singular[i]) continue;
    double angle = edge.w_angles[i].eval(psi);
    double co = std::cos(angle);
    if (std::abs(co) < 1e-12) throw AlgebraError("tan pole at this psi");
    double tan = std::sin(angle) / co;
    double q = pairing(triad, tau, triad.w_plus[i]);
    std::string origin = "n " + root_to_string(triad.w_plus[i]);
    if (action == ActionKind::Hermann)
      out.entries.push_back({q * tan, triad.n[i], origin});
    else
      add_block(q * tan, -q / 2, triad.n[i], origin);
  }
  return out;
}

CurvatureSpectrum curvature_spectrum(const SymmetricTriad& triad, const EdgeParam& edge, const Rational& psi_over_pi,
                                     ActionKind action) {
  return curvature_spectrum(triad, edge, to_double(psi_over_pi) * std::numbers::pi, action);
}

}  // namespace biharm
