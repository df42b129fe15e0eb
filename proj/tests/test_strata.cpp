#include <doctest.h>

#include <cmath>
#include <numbers>

#include "biharm/strata.hpp"

using namespace biharm;

namespace {

const Catalog& builtin() {
  static const Catalog c = Catalog::builtin();
  return c;
}

std::vector<RootVector> singular_sigma(const SymmetricTriad& t, const EdgeParam& ep) {
  std::vector<RootVector> out;
  for (size_t i = 0; i < t.sigma_plus.size(); ++i)
    if (ep.sigma_singular[i]) out.push_back(t.sigma_plus[i]);
  return out;
}

std::vector<RootVector> singular_w(const SymmetricTriad& t, const EdgeParam& ep) {
  std::vector<RootVector> out;
  for (size_t i = 0; i < t.w_plus.size(); ++i)
    if (ep.w_singular[i]) out.push_back(t.w_plus[i]);
  return out;
}

std::vector<std::string> labels(const std::vector<Stratum>& s) {
  std::vector<std::string> out;
  for (const auto& x : s) out.push_back(x.label());
  return out;
}

}  // namespace

TEST_CASE("cells") {
  Cell a2 = build_cell(builtin().lookup("SU(3),SO(3)", {}));
  CHECK(a2.kind == TriadKind::Isotropy);
  CHECK(a2.top == RootVector{1, 1});
  CHECK(a2.top_bound == 1);
  CHECK(a2.simple.size() == 2);

  Cell ib2 = build_cell(builtin().lookup("SO(2+a+b),SO(2+a)xSO(b),SO(2)xSO(a+b)", {}));
  CHECK(ib2.top == RootVector{1, 0});
  CHECK(ib2.top_bound == Rational(1, 2));

  SymmetricTriad iiib1 = builtin().lookup("SU(4),Sp(2),SO(4)", {});
  Cell c = build_cell(iiib1);
  CHECK(c.top == RootVector{1});
  CHECK(c.top_bound == Rational(1, 2));
  CHECK(c.contains(iiib1, {1.0}));
  CHECK_FALSE(c.contains(iiib1, {1.6}));
  CHECK_FALSE(c.contains(iiib1, {-0.1}));
}

TEST_CASE("strata of the closed cell") {
  SymmetricTriad b2 = builtin().lookup("SO(3)xSO(3),SO(3)", {});
  CHECK(all_strata(b2).size() == 7);
  CHECK(labels(edges(b2)) == std::vector<std::string>{"a1,delta", "a2,delta", "a1,a2"});
  for (const auto& e : edges(b2)) CHECK(e.dim == 1);

  SymmetricTriad g = builtin().lookup("UxU,Delta,KxK[G2]", {});
  CHECK(labels(edges(g)) == std::vector<std::string>{"a1,atilde", "a2,atilde", "a1,a2"});

  SymmetricTriad b1 = builtin().lookup("SO(1+q),SO(q),SO(q)", {});
  CHECK(all_strata(b1).size() == 3);
  auto e1 = edges(b1);
  REQUIRE(e1.size() == 1);
  CHECK(parametrize_edge(b1, e1[0]).psi_domain_string() == "(0,pi)");
}

TEST_CASE("edge lookup by label or index") {
  SymmetricTriad b2 = builtin().lookup("SO(3)xSO(3),SO(3)", {});
  CHECK(find_edge(b2, "delta,a2").edge_index == 2);
  CHECK(find_edge(b2, "3").label() == "a1,a2");
  CHECK_THROWS_AS(find_edge(b2, "a1,atilde"), StrataError);
  CHECK_THROWS_AS(find_edge(b2, "4"), StrataError);
}

TEST_CASE("B2 edge a1,a2 has e1+e2 singular") {
  SymmetricTriad b2 = builtin().lookup("SO(3)xSO(3),SO(3)", {});
  EdgeParam ep = parametrize_edge(b2, find_edge(b2, "a1,a2"));
  CHECK(singular_sigma(b2, ep) == std::vector<RootVector>{{1, 1}});
  CHECK(ep.psi_domain_string() == "(0,pi/2)");
  for (size_t i = 0; i < b2.sigma_plus.size(); ++i) {
    if (b2.sigma_plus[i] == RootVector{1, -1}) CHECK(ep.sigma_angles[i] == AngleForm{0, 2, false});
    if (b2.sigma_plus[i] == RootVector{0, 1}) CHECK(ep.sigma_angles[i] == AngleForm{1, -1, false});
  }
}

TEST_CASE("II-BC2 edge a1,a2 has 2a1+2a2 singular in W") {
  SymmetricTriad t = builtin().lookup("SO(10),SO(5)xSO(5),U(5)", {});
  EdgeParam ep = parametrize_edge(t, find_edge(t, "a1,a2"));
  CHECK(singular_w(t, ep) == std::vector<RootVector>{{2, 0}});
}

TEST_CASE("G2 edge a1,delta") {
  SymmetricTriad g2 = builtin().lookup("G2,SO(4)", {});
  EdgeParam ep = parametrize_edge(g2, find_edge(g2, "a1,delta"));
  CHECK(singular_sigma(g2, ep) == std::vector<RootVector>{{0, 1}});
  CHECK(ep.psi_domain_string() == "(0,pi/3)");
  CHECK(ep.sigma_angles[0] == AngleForm{0, 1, false});
}

TEST_CASE("quarter-shifted edges") {
  SymmetricTriad t = builtin().lookup("SU(2+a),SO(2+a),S(U(2)xU(a))", {});
  EdgeParam ep = parametrize_edge(t, find_edge(t, "3"));
  bool any_quarter = false;
  for (const auto& a : ep.sigma_angles) any_quarter = any_quarter || a.quarter;
  for (const auto& a : ep.w_angles) any_quarter = any_quarter || a.quarter;
  CHECK(any_quarter);
  for (size_t i = 0; i < ep.sigma_angles.size(); ++i)
    if (ep.sigma_angles[i].quarter) CHECK_FALSE(ep.sigma_singular[i]);
}

TEST_CASE("angle forms agree with the sampled edge point") {
  for (const auto& e : builtin().entries()) {
    SymmetricTriad t = e.instantiate(e.default_params());
    for (const auto& edge : edges(t)) {
      CAPTURE(e.name);
      CAPTURE(edge.label());
      EdgeParam ep = parametrize_edge(t, edge);
      for (double s : {0.13, 0.5, 0.77}) {
        double psi = (to_double(ep.psi_offset) + to_double(ep.base_scale) * s) * std::numbers::pi;
        double c = 1 / std::tan(psi);
        CHECK(c > ep.c_domain.lo.to_double());
        CHECK(c < ep.c_domain.hi.to_double());
        for (size_t i = 0; i < t.sigma_plus.size(); ++i) {
          double ang = ep.sigma_angles[i].eval(psi);
          if (ep.sigma_singular[i]) {
            CHECK(std::abs(std::remainder(ang, std::numbers::pi)) < 1e-12);
          } else {
            CHECK(std::abs(std::sin(ang)) > 1e-9);
          }
        }
        for (size_t i = 0; i < t.w_plus.size(); ++i) {
          double ang = ep.w_angles[i].eval(psi);
          if (ep.w_singular[i]) CHECK(std::abs(std::cos(ang)) < 1e-12);
          else CHECK(std::abs(std::cos(ang)) > 1e-9);
        }
      }
    }
  }
}

TEST_CASE("exact cotangent values") {
  CHECK(cot_of_pi_multiple(Rational(0)).kind == Bound::Kind::PosInf);
  CHECK(cot_of_pi_multiple(Rational(1)).kind == Bound::Kind::NegInf);
  CHECK(cot_of_pi_multiple(Rational(1, 4)).value == QuadraticSurd(Rational(1)));
  CHECK(cot_of_pi_multiple(Rational(1, 2)).value == QuadraticSurd(Rational(0)));
  CHECK(cot_of_pi_multiple(Rational(1, 6)).value == QuadraticSurd(0, 1, 3));
  CHECK(cot_of_pi_multiple(Rational(1, 3)).value == QuadraticSurd(0, Rational(1, 3), 3));
  CHECK(cot_of_pi_multiple(Rational(1, 12)).value == QuadraticSurd(2, 1, 3));
  CHECK(cot_of_pi_multiple(Rational(3, 4)).value == QuadraticSurd(Rational(-1)));
}
