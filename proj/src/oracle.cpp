#include "biharm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace biharm {

namespace {

using Vec = std::vector<double>;

// Edge geometry in floating point: H(t) from the linear face conditions.
struct Geometry {
  int rank = 0;
  std::vector<Vec> gram;
  Vec top;
  std::vector<Vec> simple;
  double bound = 0;
  double top_coeff1 = 0;
  int edge_index = 0;
  double psi_start = 0;
  double psi_length = 0;
  std::vector<Vec> sigma;
  std::vector<Vec> w;
  std::vector<long> m;
  std::vector<long> n;
  std::vector<bool> sigma_singular;
  std::vector<bool> w_singular;
  Vec direction;
  bool has_direction = false;

  Vec covector(const Vec& v) const {
    Vec out(rank, 0.0);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) out[i] += gram[i][j] * v[j];
    return out;
  }
  double inner(const Vec& x, const Vec& y) const {
    Vec gy = covector(y);
    double s = 0;
    for (int i = 0; i < rank; ++i) s += x[i] * gy[i];
    return s;
  }

  Vec h_at(double t) const {
    if (rank == 1) return {t * bound / covector(top)[0]};
    Vec r1, r2;
    double v1 = 0, v2 = 0;
    switch (edge_index) {
      case 1: r1 = covector(simple[1]); v1 = 0; r2 = covector(top); v2 = t * bound; break;
      case 2: r1 = covector(simple[0]); v1 = 0; r2 = covector(top); v2 = t * bound; break;
      default: r1 = covector(top); v1 = bound; r2 = covector(simple[0]); v2 = t * bound / top_coeff1; break;
    }
    double det = r1[0] * r2[1] - r1[1] * r2[0];
    return {(v1 * r2[1] - v2 * r1[1]) / det, (r1[0] * v2 - r2[0] * v1) / det};
  }

  double angle(const Vec& root, double psi) const { return inner(root, h_at((psi - psi_start) / psi_length)); }
};

Vec to_vec(const RootVector& r) {
  Vec v;
  for (const auto& x : r) v.push_back(to_double(x));
  return v;
}

Geometry build_geometry(const SymmetricTriad& triad, const EdgeParam& edge) {
  Geometry g;
  g.rank = triad.rank;
  for (const auto& row : triad.gram) g.gram.push_back(to_vec(row));
  for (const auto& s : simple_roots(triad)) g.simple.push_back(to_vec(s));
  g.top = to_vec(top_root(triad));
  g.bound = (triad.kind == TriadKind::Isotropy ? 1.0 : 0.5) * std::numbers::pi;
  g.edge_index = edge.stratum.edge_index;
  g.psi_start = to_double(edge.psi_offset) * std::numbers::pi;
  g.psi_length = to_double(edge.base_scale) * std::numbers::pi;
  if (g.rank == 2) {
    double det = g.simple[0][0] * g.simple[1][1] - g.simple[0][1] * g.simple[1][0];
    g.top_coeff1 = (g.top[0] * g.simple[1][1] - g.top[1] * g.simple[1][0]) / det;
  }
  for (const auto& r : triad.sigma_plus) g.sigma.push_back(to_vec(r));
  for (const auto& r : triad.w_plus) g.w.push_back(to_vec(r));
  g.m = triad.m;
  g.n = triad.n;

  // A root is singular when its angle sits at a pole for two unrelated parameter values.
  const double probes[2] = {0.3819660112501051, 0.6180339887498949};
  auto singular = [&](const Vec& r, bool is_w) {
    for (double t : probes) {
      double a = g.angle(r, g.psi_start + t * g.psi_length);
      double v = is_w ? std::cos(a) : std::sin(a);
      if (std::abs(v) > 1e-9) return false;
    }
    return true;
  };
  for (const auto& r : g.sigma) g.sigma_singular.push_back(singular(r, false));
  for (const auto& r : g.w) g.w_singular.push_back(singular(r, true));

  if (g.rank == 1) {
    g.direction = g.sigma.front();
    g.has_direction = true;
  } else {
    const Vec* s = nullptr;
    for (size_t i = 0; i < g.sigma.size() && !s; ++i)
      if (g.sigma_singular[i]) s = &g.sigma[i];
    for (size_t i = 0; i < g.w.size() && !s; ++i)
      if (g.w_singular[i]) s = &g.w[i];
    if (s) {
      Vec gs = g.covector(*s);
      g.direction = {-gs[1], gs[0]};
      g.has_direction = true;
    } else {
      g.direction = g.simple[0];
    }
  }
  return g;
}

struct Sample {
  Vec value;
  double magnitude = 0;
};

Sample tension_at(const Geometry& g, double psi) {
  Sample s{Vec(g.rank, 0.0), 0};
  for (size_t i = 0; i < g.sigma.size(); ++i) {
    if (g.sigma_singular[i]) continue;
    double a = g.angle(g.sigma[i], psi);
    double sn = std::sin(a);
    if (std::abs(sn) < 1e-12) {
      std::ostringstream os;
      os << "cot pole near psi=" << psi;
      throw AlgebraError(os.str());
    }
    double k = -static_cast<double>(g.m[i]) * std::cos(a) / sn;
    for (int j = 0; j < g.rank; ++j) s.value[j] += k * g.sigma[i][j];
    s.magnitude += std::abs(k);
  }
  for (size_t i = 0; i < g.w.size(); ++i) {
    if (g.w_singular[i]) continue;
    double a = g.angle(g.w[i], psi);
    double cs = std::cos(a);
    if (std::abs(cs) < 1e-12) {
      std::ostringstream os;
      os << "tan pole near psi=" << psi;
      throw AlgebraError(os.str());
    }
    double k = static_cast<double>(g.n[i]) * std::sin(a) / cs;
    for (int j = 0; j < g.rank; ++j) s.value[j] += k * g.w[i][j];
    s.magnitude += std::abs(k);
  }
  return s;
}

Sample criterion_at(const Geometry& g, double psi, ActionKind action) {
  const double base = action == ActionKind::Hermann ? 1.0 : 1.5;
  Sample tau = tension_at(g, psi);
  Sample s{Vec(g.rank, 0.0), 0};
  auto push = [&](double k, const Vec& r) {
    for (int j = 0; j < g.rank; ++j) s.value[j] += k * r[j];
    s.magnitude += std::abs(k) + tau.magnitude;
  };
  for (size_t i = 0; i < g.sigma.size(); ++i) {
    double p = g.inner(tau.value, g.sigma[i]);
    if (g.sigma_singular[i]) {
      if (action == ActionKind::Group) push(static_cast<double>(g.m[i]) * p, g.sigma[i]);
      continue;
    }
    double a = g.angle(g.sigma[i], psi);
    double cot = std::cos(a) / std::sin(a);
    push(static_cast<double>(g.m[i]) * p * (base - cot * cot), g.sigma[i]);
  }
  for (size_t i = 0; i < g.w.size(); ++i) {
    double q = g.inner(tau.value, g.w[i]);
    if (g.w_singular[i]) {
      if (action == ActionKind::Group) push(static_cast<double>(g.n[i]) * q, g.w[i]);
      continue;
    }
    double a = g.angle(g.w[i], psi);
    double tan = std::sin(a) / std::cos(a);
    push(static_cast<double>(g.n[i]) * q * (base - tan * tan), g.w[i]);
  }
  return s;
}

Sample evaluate(NumericFn fn, const Geometry& g, double psi) {
  switch (fn) {
    case NumericFn::TensionNorm2: return tension_at(g, psi);
    case NumericFn::HermannCriterionNorm2: return criterion_at(g, psi, ActionKind::Hermann);
    case NumericFn::GroupCriterionNorm2: return criterion_at(g, psi, ActionKind::Group);
  }
  return {};
}

double max_abs(const Vec& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void check_inside(const Geometry& g, double psi, const NumericProfile& profile) {
  double margin = profile.boundary_margin * g.psi_length;
  if (!(psi > g.psi_start + margin && psi < g.psi_start + g.psi_length - margin)) {
    std::ostringstream os;
    os << "psi=" << psi << " is outside the edge domain (" << g.psi_start << "," << g.psi_start + g.psi_length
       << ") minus the margin";
    throw AlgebraError(os.str());
  }
}

}  // namespace

void NumericProfile::check() const {
  if (grid_n < 100) throw AlgebraError("grid_n must be at least 100");
  if (!(bisect_tol > 0 && bisect_tol < 1e-6)) throw AlgebraError("bisect_tol must lie in (0, 1e-6)");
}

std::vector<double> eval_tension_numeric(const SymmetricTriad& triad, const EdgeParam& edge, double psi,
                                         ActionKind, const NumericProfile& profile) {
  Geometry g = build_geometry(triad, edge);
  check_inside(g, psi, profile);
  return tension_at(g, psi).value;
}

std::vector<double> eval_criterion_numeric(const SymmetricTriad& triad, const EdgeParam& edge, double psi,
                                           ActionKind action, const NumericProfile& profile) {
  Geometry g = build_geometry(triad, edge);
  check_inside(g, psi, profile);
  return criterion_at(g, psi, action).value;
}

std::vector<NumericRoot> find_roots_numeric(NumericFn fn, const SymmetricTriad& triad, const EdgeParam& edge,
                                            const NumericProfile& profile) {
  profile.check();
  Geometry g = build_geometry(triad, edge);
  const double lo = g.psi_start + profile.boundary_margin * g.psi_length;
  const double hi = g.psi_start + g.psi_length - profile.boundary_margin * g.psi_length;
  const int n = profile.grid_n;

  auto scalar = [&](double psi) { return g.inner(evaluate(fn, g, psi).value, g.direction); };
  // A candidate is a root of the vector function, not only of its projection.
  auto accept = [&](double psi) {
    Sample s = evaluate(fn, g, psi);
    return max_abs(s.value) <= 1e-7 * (1.0 + s.magnitude);
  };

  std::vector<double> xs(n + 1), fs(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = lo + (hi - lo) * i / n;
    fs[i] = scalar(xs[i]);
  }

  std::vector<NumericRoot> out;
  auto record = [&](double psi, bool tangential) {
    if (!accept(psi)) return;
    for (const auto& r : out)
      if (std::abs(r.psi - psi) < 1e-8) return;
    out.push_back({psi, std::abs(scalar(psi)), tangential});
  };

  for (int i = 0; i < n; ++i) {
    if (fs[i] == 0) {
      record(xs[i], false);
      continue;
    }
    if (fs[i] * fs[i + 1] < 0) {
      double a = xs[i], b = xs[i + 1], fa = fs[i];
      while (b - a > profile.bisect_tol) {
        double mid = (a + b) / 2;
        double fm = scalar(mid);
        if (fm == 0) {
          a = b = mid;
          break;
        }
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      record((a + b) / 2, false);
    }
  }
  // Even-multiplicity roots: local minima of |f| without a sign change.
  for (int i = 1; i < n; ++i) {
    double l = std::abs(fs[i - 1]), c = std::abs(fs[i]), r = std::abs(fs[i + 1]);
    if (!(c < l && c < r)) continue;
    if (fs[i - 1] * fs[i] <= 0 || fs[i] * fs[i + 1] <= 0) continue;
    double a = xs[i - 1], b = xs[i + 1];
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = std::abs(scalar(x1)), f2 = std::abs(scalar(x2));
    while (b - a > profile.bisect_tol) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - phi * (b - a);
        f1 = std::abs(scalar(x1));
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (b - a);
        f2 = std::abs(scalar(x2));
      }
    }
    double x = (a + b) / 2;
    Sample s = evaluate(fn, g, x);
    if (std::abs(scalar(x)) <= 1e-8 * (1.0 + s.magnitude)) record(x, true);
  }
  std::sort(out.begin(), out.end(), [](const NumericRoot& a, const NumericRoot& b) { return a.psi < b.psi; });
  return out;
}

CrossCheckReport cross_check(const ClassificationResult& exact, const SymmetricTriad& triad,
                             const NumericProfile& profile) {
  CrossCheckReport rep;
  Stratum st = find_edge(triad, exact.edge_label);
  EdgeParam ep = parametrize_edge(triad, st);
  std::ostringstream diag;

  if (exact.all_harmonic || exact.all_biharmonic) {
    Geometry g = build_geometry(triad, ep);
    bool ok = true;
    for (double t : {0.25, 0.5, 0.75}) {
      double psi = g.psi_start + t * g.psi_length;
      Sample s = exact.all_harmonic ? tension_at(g, psi) : criterion_at(g, psi, exact.action);
      if (max_abs(s.value) > 1e-9 * (1.0 + s.magnitude)) ok = false;
    }
    rep.match = ok;
    rep.diagnostics = ok ? "identically satisfied" : "exact path claims an identity the oracle does not see";
    return rep;
  }

  auto tension = find_roots_numeric(NumericFn::TensionNorm2, triad, ep, profile);
  auto crit = find_roots_numeric(
      exact.action == ActionKind::Hermann ? NumericFn::HermannCriterionNorm2 : NumericFn::GroupCriterionNorm2, triad,
      ep, profile);
  std::vector<double> proper;
  for (const auto& r : crit) {
    bool harmonic = std::any_of(tension.begin(), tension.end(),
                                [&](const NumericRoot& h) { return std::abs(h.psi - r.psi) < 1e-7; });
    if (!harmonic) proper.push_back(r.psi);
  }

  auto compare = [&](const std::vector<RootInfo>& ex, const std::vector<double>& num, const char* what) {
    std::vector<double> e;
    for (const auto& r : ex) e.push_back(r.psi);
    std::sort(e.begin(), e.end());
    bool ok = e.size() == num.size();
    if (!ok) diag << what << ": exact " << e.size() << " vs numeric " << num.size() << "; ";
    for (size_t i = 0; i < std::min(e.size(), num.size()); ++i) {
      double d = std::abs(e[i] - num[i]);
      rep.deltas.push_back(d);
      rep.max_delta = std::max(rep.max_delta, d);
      if (d > 1e-9) {
        ok = false;
        diag << what << " root " << i << " differs by " << d << "; ";
      }
    }
    return ok;
  };
  std::vector<double> harm;
  for (const auto& r : tension) harm.push_back(r.psi);
  bool ok_proper = compare(exact.proper_roots, proper, "proper");
  bool ok_harm = compare(exact.harmonic_roots, harm, "harmonic");
  rep.exact_count = exact.proper_roots.size();
  rep.numeric_count = proper.size();
  rep.match = ok_proper && ok_harm;
  rep.diagnostics = rep.match ? "ok" : diag.str();
  return rep;
}

}  // namespace biharm
