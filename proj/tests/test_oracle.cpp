#include <doctest.h>

#include <cmath>
#include <numbers>

#include "biharm/oracle.hpp"

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

TEST_CASE("B1 tension vanishes at the equator") {
  Setup s = setup("SO(1+q),SO(q),SO(q)", {{"q", 3}}, "1");
  auto v = eval_tension_numeric(s.triad, s.edge, std::numbers::pi / 2, ActionKind::Hermann);
  REQUIRE(v.size() == 1);
  CHECK(std::abs(v[0]) < 1e-12);
}

TEST_CASE("numeric and exact tension agree") {
  for (const auto& e : builtin().entries()) {
    SymmetricTriad t = e.instantiate(e.default_params());
    for (const auto& stratum : edges(t)) {
      CAPTURE(e.name);
      CAPTURE(stratum.label());
      EdgeParam ep = parametrize_edge(t, stratum);
      TensionField tf = tension_field(t, ep, ActionKind::Hermann);
      for (double s : {0.21, 0.64}) {
        double psi = (to_double(ep.psi_offset) + to_double(ep.base_scale) * s) * std::numbers::pi;
        auto exact = tf.fn.eval(1 / std::tan(psi));
        auto numeric = eval_tension_numeric(t, ep, psi, ActionKind::Hermann);
        REQUIRE(exact.size() == numeric.size());
        for (size_t i = 0; i < exact.size(); ++i) CHECK(numeric[i] == doctest::Approx(exact[i]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("points outside the edge are rejected") {
  Setup s = setup("SU(3),SO(3)", {}, "a1,delta");
  CHECK_THROWS_AS(eval_tension_numeric(s.triad, s.edge, -0.1, ActionKind::Hermann), AlgebraError);
  CHECK_THROWS_AS(eval_criterion_numeric(s.triad, s.edge, 4.0, ActionKind::Hermann), AlgebraError);
}

TEST_CASE("numeric roots for A2 edge a1,delta") {
  Setup s = setup("SU(3),SO(3)", {}, "a1,delta");
  auto harm = find_roots_numeric(NumericFn::TensionNorm2, s.triad, s.edge);
  REQUIRE(harm.size() == 1);
  CHECK(harm[0].psi == doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));

  auto crit = find_roots_numeric(NumericFn::HermannCriterionNorm2, s.triad, s.edge);
  std::vector<double> psis;
  for (const auto& r : crit) psis.push_back(r.psi / std::numbers::pi);
  REQUIRE(psis.size() == 3);
  CHECK(psis[0] == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(psis[1] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(psis[2] == doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("numeric root of the C2 quartic edge") {
  Setup s = setup("Sp(2)xSp(2),Sp(2)", {}, "a1,delta");
  auto crit = find_roots_numeric(NumericFn::HermannCriterionNorm2, s.triad, s.edge);
  double expect = std::atan(1 / std::sqrt((4 + std::sqrt(13.0)) / 3));
  bool found = false;
  for (const auto& r : crit) found = found || std::abs(r.psi - expect) < 1e-9;
  CHECK(found);
}

TEST_CASE("profile validation") {
  NumericProfile p;
  p.grid_n = 10;
  CHECK_THROWS_AS(p.check(), AlgebraError);
  p = NumericProfile{};
  p.bisect_tol = 0.1;
  CHECK_THROWS_AS(p.check(), AlgebraError);
  CHECK_NOTHROW(NumericProfile{}.check());
}

TEST_CASE("cross check agrees with the exact classifier") {
  const CatalogEntry& e = builtin().entry("SO(4+n),SO(2)xSO(2+n)");
  Params p = e.default_params();
  SymmetricTriad t = e.instantiate(p);
  for (const auto& stratum : edges(t)) {
    ClassificationResult r = classify_family(e, p, stratum, ActionKind::Hermann);
    CrossCheckReport rep = cross_check(r, t);
    CAPTURE(rep.diagnostics);
    CHECK(rep.match);
    CHECK(rep.max_delta < 1e-9);
  }
}

TEST_CASE("cross check detects an injected fault") {
  const CatalogEntry& e = builtin().entry("SU(3),SO(3)");
  SymmetricTriad t = e.instantiate({});
  ClassificationResult base = classify_family(e, {}, find_edge(t, "a1,delta"), ActionKind::Hermann);
  CHECK(cross_check(base, t).match);

  ClassificationResult dropped = reclassify_with(base, Poly{-1, 1});
  CrossCheckReport rep = cross_check(dropped, t);
  CHECK_FALSE(rep.match);
  CHECK_FALSE(rep.diagnostics.empty());

  ClassificationResult shifted = reclassify_with(base, Poly({Rational(-11, 10), 0, 1}));
  CHECK_FALSE(cross_check(shifted, t).match);
}
