#include <doctest.h>

#include <cmath>
#include <numbers>

#include "biharm/criterion.hpp"

using namespace biharm;

namespace {

const Catalog& builtin() {
  static const Catalog c = Catalog::builtin();
  return c;
}

struct Setup {
  SymmetricTriad triad;
  EdgeParam edge;
};

Setup setup(const std::string& name, const Params& params, const std::string& edge) {
  SymmetricTriad t = builtin().lookup(name, params);
  return {t, parametrize_edge(t, find_edge(t, edge))};
}

}  // namespace

TEST_CASE("B1 tension is -m cot psi alpha") {
  for (long q : {2L, 3L, 7L}) {
    Setup s = setup("SO(1+q),SO(q),SO(q)", {{"q", q}}, "1");
    TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
    REQUIRE(tf.fn.rank() == 1);
    CHECK(tf.fn[0] == RationalFn(Poly{0, -(q - 1)}));
  }
}

TEST_CASE("A2 edge a1,delta tension is along 2a1+a2") {
  Setup s = setup("SU(3),SO(3)", {}, "a1,delta");
  TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
  CHECK(tf.fn[0] == RationalFn(Poly{0, -2}));
  CHECK(tf.fn[1] == RationalFn(Poly{0, -1}));
}

TEST_CASE("BC2 edge a2,delta tension") {
  for (long n : {1L, 2L, 5L}) {
    Setup s = setup("SU(4+n),S(U(2)xU(2+n))", {{"n", n}}, "a2,delta");
    long m1 = 2 * n, m2 = 2, m3 = 1;
    RationalFn c(Poly{0, 1});
    RationalFn coeff = Rational(-1, 2) * (Rational(2 * m1 + m2 + 2 * m3) * c - Rational(m2 + 2 * m3) * c.reciprocal());
    TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
    CHECK(tf.fn[0] == coeff);
    CHECK(tf.fn[1] == coeff);
  }
}

TEST_CASE("hermann and group tension fields coincide") {
  Setup s = setup("SU(2+2q),S(U(2)xU(2q)),Sp(1+q)", {{"q", 3}}, "1");
  CHECK(tension_field(s.triad, s.edge, ActionKind::Hermann).fn == tension_field(s.triad, s.edge, ActionKind::Group).fn);
}

TEST_CASE("harmonic polynomials") {
  auto harm = [](const std::string& name, const Params& p, const std::string& edge) {
    Setup s = setup(name, p, edge);
    return harmonic_polynomial(tension_field(s.triad, s.edge, ActionKind::Hermann));
  };
  CHECK(harm("SU(3),SO(3)", {}, "1").poly == Poly{0, 1});
  for (long n : {1L, 2L, 4L}) {
    CHECK(harm("SO(4+n),SO(2)xSO(2+n)", {{"n", n}}, "2").poly == Poly({Rational(-1, 2 * n + 1), 0, 1}));
  }
  CHECK(harm("Sp(2),U(2),Sp(1)xSp(1)", {}, "1").poly == Poly{-2, 0, 1});
  CHECK(harm("SO(1+b+c),SO(1+b)xSO(c),SO(b+c)", {{"b", 3}, {"c", 3}}, "1").poly ==
        Poly({Rational(-3, 2), 0, 1}));
  CHECK_FALSE(harm("SU(3),SO(3)", {}, "1").all_harmonic);
}

TEST_CASE("curvature spectrum of B1 at pi/4") {
  Setup s = setup("SO(1+q),SO(q),SO(q)", {{"q", 3}}, "1");
  CurvatureSpectrum sp = curvature_spectrum(s.triad, s.edge, Rational(1, 4), ActionKind::Hermann);
  REQUIRE(sp.entries.size() == 1);
  CHECK(sp.entries[0].eigenvalue == doctest::Approx(2.0));
  CHECK(sp.entries[0].multiplicity == 2);
  CHECK(sp.trace() == doctest::Approx(4.0));
}

TEST_CASE("curvature spectrum vanishes at the harmonic point") {
  Setup s = setup("SO(1+q),SO(q),SO(q)", {{"q", 3}}, "1");
  CurvatureSpectrum sp = curvature_spectrum(s.triad, s.edge, Rational(1, 2), ActionKind::Hermann);
  for (const auto& e : sp.entries) CHECK(std::abs(e.eigenvalue) < 1e-12);
  CurvatureSpectrum g = curvature_spectrum(s.triad, s.edge, Rational(1, 2), ActionKind::Group);
  for (const auto& e : g.entries) CHECK(std::abs(e.eigenvalue) < 1e-12);
}

TEST_CASE("A2 spectrum skips the singular root") {
  Setup s = setup("SU(3),SO(3)", {}, "a1,delta");
  CurvatureSpectrum sp = curvature_spectrum(s.triad, s.edge, Rational(1, 4), ActionKind::Hermann);
  std::vector<std::string> origins;
  for (const auto& e : sp.entries) origins.push_back(e.origin);
  CHECK(origins == std::vector<std::string>{"m [1,0]", "m [1,1]"});
}

TEST_CASE("trace identity") {
  Setup s = setup("Sp(4+n),Sp(2)xSp(2+n)", {{"n", 2}}, "3");
  TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
  RationalFn n2 = tf.fn.norm2(s.triad);
  for (double t : {0.1, 0.45, 0.8}) {
    double psi = (to_double(s.edge.psi_offset) + to_double(s.edge.base_scale) * t) * std::numbers::pi;
    double expect = n2.eval(1 / std::tan(psi));
    for (ActionKind a : {ActionKind::Hermann, ActionKind::Group})
      CHECK(curvature_spectrum(s.triad, s.edge, psi, a).trace() == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("criterion for A2 edge a1,delta") {
  Setup s = setup("SU(3),SO(3)", {}, "a1,delta");
  TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
  CriterionPolynomial crit = hermann_criterion(s.triad, s.edge, tf);
  CHECK(crit.poly == Poly{0, -1, 0, 1});
  CHECK(proper_part(crit, harmonic_polynomial(tf).poly) == Poly{-1, 0, 1});
}

TEST_CASE("criterion for III-A2 is harmonic only") {
  for (const char* e : {"1", "2", "3"}) {
    Setup s = setup("SU(6),Sp(3),SO(6)", {}, e);
    TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
    CriterionPolynomial crit = build_criterion(s.triad, s.edge, tf, ActionKind::Hermann);
    CHECK(proper_part(crit, harmonic_polynomial(tf).poly) == Poly{1});
  }
}

TEST_CASE("criterion for III-B2 with equal multiplicities") {
  Setup s = setup("UxU,Delta,KxK[B2]", {{"m", 2}, {"n", 2}}, "1");
  TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
  CriterionPolynomial crit = build_criterion(s.triad, s.edge, tf, ActionKind::Hermann);
  CHECK(proper_part(crit, harmonic_polynomial(tf).poly) == Poly{1});
}

TEST_CASE("group criterion for B1") {
  Setup s = setup("SO(1+q),SO(q),SO(q)", {{"q", 4}}, "1");
  TensionField tf = tension_field(s.triad, s.edge, ActionKind::Group);
  CriterionPolynomial crit = group_criterion(s.triad, s.edge, tf);
  CHECK(proper_part(crit, harmonic_polynomial(tf).poly) == Poly({Rational(-3, 2), 0, 1}));
}

TEST_CASE("group criterion for II-BC1 and III-BC1") {
  for (long q : {2L, 3L, 9L}) {
    Setup s = setup("SU(1+q),SO(1+q),S(U(1)xU(q))", {{"q", q}}, "1");
    TensionField tf = tension_field(s.triad, s.edge, ActionKind::Group);
    Poly proper = proper_part(group_criterion(s.triad, s.edge, tf), harmonic_polynomial(tf).poly);
    long m = q - 1, n = 1;
    // cot(2psi) = (c^2-1)/(2c); clear the denominator (2c)^4.
    Poly u = Poly{-1, 0, 1}.pow(2);
    Poly two_c_sq = Poly{0, 0, 4};
    Poly in_c = Rational(4 * m) * u * u + Rational(-(m + 6 * n)) * u * two_c_sq + Rational(4 * n) * two_c_sq * two_c_sq;
    CHECK(proper.monic() == in_c.monic());
  }
  for (long q : {2L, 3L, 9L}) {
    Setup s = setup("Sp(1+q),U(1+q),Sp(1)xSp(q)", {{"q", q}}, "1");
    TensionField tf = tension_field(s.triad, s.edge, ActionKind::Group);
    Poly proper = proper_part(group_criterion(s.triad, s.edge, tf), harmonic_polynomial(tf).poly);
    long m1 = 2 * (q - 1), m2 = 1, n = 2;
    Poly u = Poly{-1, 0, 1}.pow(2);
    Poly two_c_sq = Poly{0, 0, 4};
    Poly in_c = Rational(4 * (m1 + m2)) * u * u + Rational(-(m1 + 6 * m2 + 6 * n)) * u * two_c_sq +
                Rational(4 * n) * two_c_sq * two_c_sq;
    Poly sf = squarefree_part(in_c);
    CHECK(proper == exact_div(sf, poly_gcd(sf, harmonic_polynomial(tf).poly)));
  }
}

TEST_CASE("G2 edge a1,delta criterion contains the quartic") {
  Setup s = setup("G2,SO(4)", {}, "a1,delta");
  TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
  Poly proper = proper_part(hermann_criterion(s.triad, s.edge, tf), harmonic_polynomial(tf).poly);
  REQUIRE(proper.is_even());
  // Expansion of (x^2+2y^2)(x+y)^2 + 9(xy-1)^2 - 12(x+y)^2 with y = cot 2psi, times 8x^4.
  CHECK(proper.even_part_in_square().monic() == Poly{1, -32, 330, -360, 45}.monic());
  CHECK(sturm_count(proper.even_part_in_square(), Interval(Bound::at(Rational(1, 3)), Bound::pos_inf())) == 2);
}

TEST_CASE("G2 edge a1,a2 criterion contains the quartic") {
  Setup s = setup("G2,SO(4)", {}, "a1,a2");
  TensionField tf = tension_field(s.triad, s.edge, ActionKind::Hermann);
  Poly proper = proper_part(hermann_criterion(s.triad, s.edge, tf), harmonic_polynomial(tf).poly);
  REQUIRE(proper.is_even());
  CHECK(proper.even_part_in_square().monic() == Poly{45, -360, 330, -32, 1}.monic());
}
