#include "biharm/strata.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace biharm {

namespace {

std::string top_name(TriadKind k) { return k == TriadKind::Isotropy ? "delta" : "atilde"; }

Rational rational_gcd(const Rational& x, const Rational& y) {
  Integer num, den;
  mpz_gcd(num.get_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  Rational g(num, den);
  g.canonicalize();
  return g;
}

// Open interval (lo, hi) in units of pi contains a point of offset + Z.
bool hits(const Rational& lo, const Rational& hi, const Rational& offset) {
  Rational a = std::min(lo, hi) - offset;
  Rational b = std::max(lo, hi) - offset;
  // smallest integer > a
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  Rational next = Rational(fl + 1);
  return next < b;
}

}  // namespace

double AngleForm::eval(double psi) const {
  return halfpi_k * std::numbers::pi / 2 + (quarter ? std::numbers::pi / 4 : 0.0) + step_j * psi;
}

std::string AngleForm::to_string() const {
  std::string s;
  if (quarter) {
    long q = 2 * halfpi_k + 1;
    s = (q == 1 ? "" : q == -1 ? "-" : std::to_string(q)) + "pi/4";
  } else if (halfpi_k != 0) {
    if (halfpi_k % 2 == 0)
      s = (halfpi_k == 2 ? "" : std::to_string(halfpi_k / 2)) + "pi";
    else
      s = (halfpi_k == 1 ? "" : std::to_string(halfpi_k)) + "pi/2";
    if (halfpi_k == -2) s = "-pi";
    if (halfpi_k == -1) s = "-pi/2";
  }
  if (step_j != 0) {
    std::string term = (std::abs(step_j) == 1 ? "" : std::to_string(std::abs(step_j))) + "psi";
    if (s.empty())
      s = (step_j < 0 ? "-" : "") + term;
    else
      s += (step_j < 0 ? "-" : "+") + term;
  }
  return s.empty() ? "0" : s;
}

bool Cell::contains(const SymmetricTriad& triad, const std::vector<double>& h) const {
  auto angle = [&](const RootVector& r) {
    double s = 0;
    for (int i = 0; i < triad.rank; ++i)
      for (int j = 0; j < triad.rank; ++j) s += to_double(r[i]) * to_double(triad.gram[i][j]) * h[j];
    return s;
  };
  for (const auto& a : simple)
    if (!(angle(a) > 0)) return false;
  return angle(top) < to_double(top_bound) * std::numbers::pi;
}

std::string Cell::to_string() const {
  std::string s;
  for (size_t i = 0; i < simple.size(); ++i) s += "0<<" + root_to_string(simple[i]) + ",H>, ";
  std::string bound = top_bound == 1 ? "pi" : biharm::to_string(top_bound) + "*pi";
  return s + "<" + root_to_string(top) + ",H><" + bound;
}

std::string Stratum::label() const {
  std::string s;
  for (size_t i = 0; i < delta.size(); ++i) s += (i ? "," : "") + delta[i];
  return s;
}

namespace {

std::string pi_multiple(const Rational& r) {
  if (r == 0) return "0";
  std::string num = r.get_num() == 1 ? "" : r.get_num().get_str();
  if (r.get_den() == 1) return num + "pi";
  return num + "pi/" + r.get_den().get_str();
}

}  // namespace

std::string EdgeParam::psi_domain_string() const {
  Rational end = psi_offset + base_scale;
  return "(" + pi_multiple(psi_offset) + "," + pi_multiple(end) + ")";
}

Cell build_cell(const SymmetricTriad& triad) {
  Cell c;
  try {
    c.simple = simple_roots(triad);
    c.top = top_root(triad);
  } catch (const CatalogError& e) {
    throw StrataError(std::string("cannot build cell: ") + e.what());
  }
  c.kind = triad.kind;
  c.top_bound = triad.kind == TriadKind::Isotropy ? Rational(1) : Rational(1, 2);
  return c;
}

std::vector<Stratum> all_strata(const SymmetricTriad& triad) {
  std::vector<std::string> names;
  if (triad.rank == 1)
    names = {"a", top_name(triad.kind)};
  else
    names = {"a1", "a2", top_name(triad.kind)};
  std::vector<Stratum> out;
  int count = static_cast<int>(names.size());
  for (int mask = 1; mask < (1 << count); ++mask) {
    Stratum s;
    for (int i = 0; i < count; ++i)
      if (mask & (1 << i)) s.delta.push_back(names[i]);
    s.dim = static_cast<int>(s.delta.size()) - 1;
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) { return a.dim < b.dim; });
  return out;
}

std::vector<Stratum> edges(const SymmetricTriad& triad) {
  std::string t = top_name(triad.kind);
  if (triad.rank == 1) return {Stratum{{"a", t}, 1, 1}};
  return {Stratum{{"a1", t}, 1, 1}, Stratum{{"a2", t}, 1, 2}, Stratum{{"a1", "a2"}, 1, 3}};
}

Stratum find_edge(const SymmetricTriad& triad, const std::string& label) {
  auto all = edges(triad);
  std::string key;
  for (char ch : label)
    if (!std::isspace(static_cast<unsigned char>(ch))) key += ch;
  for (const auto& e : all) {
    if (key == std::to_string(e.edge_index) || key == e.label()) return e;
    if (e.delta.size() == 2 && key == e.delta[1] + "," + e.delta[0]) return e;
  }
  throw StrataError("no edge \"" + label + "\" for " + triad.name);
}

Bound cot_of_pi_multiple(const Rational& r) {
  if (r == 0) return Bound::pos_inf();
  if (r == 1) return Bound::neg_inf();
  if (r == Rational(1, 12)) return Bound::at(QuadraticSurd(2, 1, 3));
  if (r == Rational(5, 12)) return Bound::at(QuadraticSurd(2, -1, 3));
  if (r == Rational(7, 12)) return Bound::at(QuadraticSurd(-2, 1, 3));
  if (r == Rational(11, 12)) return Bound::at(QuadraticSurd(-2, -1, 3));
  if (r == Rational(1, 2)) return Bound::at(QuadraticSurd(0));
  if (r == Rational(1, 4)) return Bound::at(QuadraticSurd(1));
  if (r == Rational(3, 4)) return Bound::at(QuadraticSurd(-1));
  if (r == Rational(1, 3)) return Bound::at(QuadraticSurd(0, Rational(1, 3), 3));
  if (r == Rational(2, 3)) return Bound::at(QuadraticSurd(0, Rational(-1, 3), 3));
  if (r == Rational(1, 6)) return Bound::at(QuadraticSurd(0, 1, 3));
  if (r == Rational(5, 6)) return Bound::at(QuadraticSurd(0, -1, 3));
  throw StrataError("no exact cotangent for " + to_string(r) + "*pi");
}

EdgeParam parametrize_edge(const SymmetricTriad& triad, const Stratum& edge) {
  if (edge.dim != 1 || edge.edge_index == 0) throw StrataError("parametrize_edge needs a one-dimensional stratum");
  Cell cell = build_cell(triad);
  const Rational& bound = cell.top_bound;
  auto b = simple_coordinates(triad, cell.simple, cell.top);

  // angle(lambda)/pi = constant + slope * t
  auto linear = [&](const RootVector& root) -> std::pair<Rational, Rational> {
    auto a = simple_coordinates(triad, cell.simple, root);
    if (triad.rank == 1) return {0, a[0] * bound / b[0]};
    switch (edge.edge_index) {
      case 1: return {0, a[0] * bound / b[0]};
      case 2: return {0, a[1] * bound / b[1]};
      default: return {a[1] * bound / b[1], bound * (a[0] / b[0] - a[1] / b[1])};
    }
  };

  std::vector<std::pair<Rational, Rational>> sig, w;
  for (const auto& r : triad.sigma_plus) sig.push_back(linear(r));
  for (const auto& r : triad.w_plus) w.push_back(linear(r));

  Rational scale = 0;
  for (const auto* list : {&sig, &w})
    for (const auto& [c0, s] : *list)
      if (s != 0) scale = scale == 0 ? Rational(abs(s)) : rational_gcd(scale, abs(s));
  if (scale == 0) throw StrataError("edge has no moving angle");
  if (scale > 1) throw StrataError("edge scale exceeds pi");

  // psi/pi = offset + scale*t turns c0 + s*t into (c0 - j*offset) + j*psi/pi with j = s/scale.
  // Multiples of pi/2 are preferred; pi/4 constants are the fallback.
  auto constant_ok = [&](const Rational& offset, long unit) {
    for (const auto* list : {&sig, &w})
      for (const auto& [c0, s] : *list) {
        Rational k = unit * (c0 - s / scale * offset);
        if (k.get_den() != 1) return false;
      }
    return true;
  };
  std::optional<Rational> offset;
  for (long unit : {2, 4})
    for (long den = 1; den <= 24 && !offset; ++den)
      for (long num = 0; num < den && !offset; ++num) {
        Rational u(num, den);
        u.canonicalize();
        if (u.get_den() == den && u + scale <= 1 && constant_ok(u, unit)) offset = u;
      }
  if (!offset) throw StrataError("angle is not of the form k*pi/2 + j*psi");

  EdgeParam p;
  p.stratum = edge;
  p.base_scale = scale;
  p.psi_offset = *offset;
  p.c_domain = Interval(cot_of_pi_multiple(*offset + scale), cot_of_pi_multiple(*offset));

  auto to_form = [&](const std::pair<Rational, Rational>& lin) {
    Rational j = lin.second / scale;
    Rational k = 2 * (lin.first - j * *offset);
    if (j.get_den() == 1 && k.get_den() == 2) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), k.get_num_mpz_t(), k.get_den_mpz_t());
      return AngleForm{fl.get_si(), j.get_num().get_si(), true};
    }
    if (k.get_den() != 1 || j.get_den() != 1)
      throw StrataError("angle is not of the form k*pi/2 + j*psi");
    return AngleForm{k.get_num().get_si(), j.get_num().get_si()};
  };
  // Angle range over the psi domain, in units of pi.
  auto range = [&](const AngleForm& f) {
    Rational half(2 * f.halfpi_k + (f.quarter ? 1 : 0), 4);
    half.canonicalize();
    Rational lo = half + Rational(f.step_j) * *offset;
    Rational hi = lo + Rational(f.step_j) * scale;
    return std::make_pair(lo, hi);
  };

  for (size_t i = 0; i < sig.size(); ++i) {
    AngleForm f = to_form(sig[i]);
    p.sigma_angles.push_back(f);
    p.sigma_singular.push_back(f.is_constant() && !f.quarter && f.halfpi_k % 2 == 0);
    if (!f.is_constant()) {
      auto [lo, hi] = range(f);
      if (hits(lo, hi, 0))
        throw StrataError("root " + root_to_string(triad.sigma_plus[i]) + " becomes singular inside the edge");
    }
  }
  for (size_t i = 0; i < w.size(); ++i) {
    AngleForm f = to_form(w[i]);
    p.w_angles.push_back(f);
    p.w_singular.push_back(f.is_constant() && !f.quarter && f.halfpi_k % 2 != 0);
    if (!f.is_constant()) {
      auto [lo, hi] = range(f);
      if (hits(lo, hi, Rational(1, 2)))
        throw StrataError("root " + root_to_string(triad.w_plus[i]) + " becomes singular inside the edge");
    }
  }
  return p;
}

}  // namespace biharm
