#pragma once

#include <string>
#include <vector>

#include "biharm/catalog.hpp"
#include "biharm/strata.hpp"
#include "biharm/trig.hpp"

namespace biharm {

enum class ActionKind { Hermann, Group };

std::string to_string(ActionKind a);

struct TensionField {
  TrigRationalFn fn;
  EdgeParam edge;
};

/// tau = -sum m cot<lambda,H> lambda + sum n tan<alpha,H> alpha over the non-singular roots.
TensionField tension_field(const SymmetricTriad& triad, const EdgeParam& edge, ActionKind action);

struct HarmonicPolynomial {
  /// tau vanishes identically along the edge.
  bool all_harmonic = false;
  /// Monic squarefree; the constant 1 when the components share no root.
  Poly poly;
};

HarmonicPolynomial harmonic_polynomial(const TensionField& tf);

struct SpectrumEntry {
  double eigenvalue = 0;
  long multiplicity = 0;
  std::string origin;
};

struct CurvatureSpectrum {
  std::vector<SpectrumEntry> entries;
  double trace() const;
};

/// Shape operator along tau at psi (radians).
CurvatureSpectrum curvature_spectrum(const SymmetricTriad& triad, const EdgeParam& edge, double psi,
                                     ActionKind action);
/// Same at psi = psi_over_pi * pi.
CurvatureSpectrum curvature_spectrum(const SymmetricTriad& triad, const EdgeParam& edge, const Rational& psi_over_pi,
                                     ActionKind action);

}  // namespace biharm
