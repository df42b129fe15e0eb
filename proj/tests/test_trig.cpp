#include <doctest.h>

#include <cmath>

#include "biharm/trig.hpp"

using namespace biharm;

TEST_CASE("cot of multiple angles") {
  CHECK(cot_multiple(1) == RationalFn(Poly{0, 1}));
  CHECK(cot_multiple(2) == RationalFn(Poly{-1, 0, 1}, Poly{0, 2}));
  CHECK(cot_multiple(3) == RationalFn(Poly{0, -3, 0, 1}, Poly{-1, 0, 3}));
  CHECK_THROWS_AS(cot_multiple(0), AlgebraError);
}

TEST_CASE("multiple-angle formulas match libm") {
  for (long j = 1; j <= 6; ++j) {
    RationalFn cj = cot_multiple(j);
    RationalFn tj = tan_multiple(j);
    for (double psi : {0.11, 0.37, 0.61, 1.23}) {
      CAPTURE(j);
      CAPTURE(psi);
      double c = 1 / std::tan(psi);
      CHECK(cj.eval(c) == doctest::Approx(1 / std::tan(j * psi)).epsilon(1e-10));
      CHECK(tj.eval(c) == doctest::Approx(std::tan(j * psi)).epsilon(1e-10));
    }
  }
}

TEST_CASE("phase rules") {
  CHECK(eval_trig_term({TrigKind::Cot, AngleForm{0, 1, false}}) == RationalFn(Poly{0, 1}));
  CHECK(eval_trig_term({TrigKind::Tan, AngleForm{1, 1, false}}) == RationalFn(Poly{0, -1}));
  CHECK(eval_trig_term({TrigKind::Cot, AngleForm{1, 2, false}}) == RationalFn(Poly{0, -2}, Poly{-1, 0, 1}));
  CHECK(eval_trig_term({TrigKind::Cot, AngleForm{2, -1, false}}) == RationalFn(Poly{0, -1}));
  CHECK(eval_trig_term({TrigKind::Tan, AngleForm{0, 0, true}}) == RationalFn::constant(1));
  CHECK(eval_trig_term({TrigKind::Cot, AngleForm{1, 0, true}}) == RationalFn::constant(-1));
  CHECK(eval_trig_term({TrigKind::Cot, AngleForm{1, 0, false}}) == RationalFn::constant(0));
  CHECK_THROWS_AS(eval_trig_term({TrigKind::Cot, AngleForm{2, 0, false}}), AlgebraError);
  CHECK_THROWS_AS(eval_trig_term({TrigKind::Tan, AngleForm{1, 0, false}}), AlgebraError);
}

TEST_CASE("quarter angles match libm") {
  const double pi = 3.14159265358979323846;
  for (long k : {0L, 1L, -1L, 2L}) {
    for (long j : {1L, -1L, 2L}) {
      AngleForm a{k, j, true};
      RationalFn cot = eval_trig_term({TrigKind::Cot, a});
      RationalFn tan = eval_trig_term({TrigKind::Tan, a});
      for (double psi : {0.07, 0.19, 0.31}) {
        double c = 1 / std::tan(psi);
        double ang = a.eval(psi);
        CHECK(std::abs(ang - (k * pi / 2 + pi / 4 + j * psi)) < 1e-12);
        CHECK(cot.eval(c) == doctest::Approx(1 / std::tan(ang)).epsilon(1e-10));
        CHECK(tan.eval(c) == doctest::Approx(std::tan(ang)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("combining weighted terms") {
  TrigRationalFn f = combine({{Rational(-3), {TrigKind::Cot, AngleForm{0, 1, false}}, {1}, "a"}}, 1);
  REQUIRE(f.rank() == 1);
  CHECK(f[0] == RationalFn(Poly{0, -3}));

  CHECK(combine({}, 2).is_zero());
  CHECK(combine({}, 2).rank() == 2);

  TrigRationalFn g = combine({{Rational(1), {TrigKind::Cot, AngleForm{0, 1, false}}, {1, 0}, "e"},
                              {Rational(1), {TrigKind::Cot, AngleForm{0, 1, false}}, {1, 1}, "e"}},
                             2);
  CHECK(g[0] == RationalFn(Poly{0, 2}));
  CHECK(g[1] == RationalFn(Poly{0, 1}));

  CHECK_THROWS_AS(combine({{Rational(1), {TrigKind::Cot, AngleForm{0, 1, false}}, {1, 0}, "e"},
                           {Rational(1), {TrigKind::Cot, AngleForm{0, 1, false}}, {1, 1}, "f"}},
                          2),
                  AlgebraError);
  CHECK_THROWS_AS(combine({{Rational(1), {TrigKind::Cot, AngleForm{0, 1, false}}, {1}, "e"}}, 2), AlgebraError);
}

TEST_CASE("poles and evaluation") {
  TrigRationalFn f(std::vector<RationalFn>{RationalFn(Poly{1}, Poly{0, 1}), RationalFn(Poly{1}, Poly{-1, 0, 1})});
  CHECK(f.poles() == Poly{0, -1, 0, 1});
  auto v = f.eval(2.0);
  CHECK(v[0] == doctest::Approx(0.5));
  CHECK(v[1] == doctest::Approx(1.0 / 3));
}
