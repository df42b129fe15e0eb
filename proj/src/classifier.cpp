#include "biharm/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <numbers>

namespace biharm {

namespace {

// Writes P(c) = sum r_k (c^2-1)^k (2c)^(h-k), h = deg/2, so that P(c)/(2c)^h = R(cot 2psi).
std::optional<Poly> rewrite_in_double_angle(const Poly& p) {
  int d = p.degree();
  if (d < 2 || d % 2 != 0) return std::nullopt;
  int h = d / 2;
  const Poly c2m1({-1, 0, 1});
  const Poly two_c({0, 2});
  std::vector<Rational> r(h + 1);
  Poly rem = p;
  for (int k = h; k >= 0; --k) {
    Poly basis = c2m1.pow(k) * two_c.pow(h - k);
    r[k] = rem.coeff(h + k) / basis.leading();
    rem -= r[k] * basis;
  }
  if (!rem.is_zero()) return std::nullopt;
  return Poly(r);
}

std::optional<ReducedForm> attempt(const Poly& p, int level) {
  const std::string base = level == 0 ? "cot(psi)" : "cot(2psi)";
  const std::string sq = level == 0 ? "cot^2(psi)" : "cot^2(2psi)";
  ReducedForm f;
  f.level = level;
  if (p.degree() <= 2) {
    f.variable = base;
    f.poly = p;
  } else if (p.is_even() && p.degree() <= 4) {
    f.variable = sq;
    f.poly = p.even_part_in_square();
    f.squared = true;
  } else if (level == 0) {
    auto r = rewrite_in_double_angle(p);
    if (!r) return std::nullopt;
    return attempt(*r, 1);
  } else {
    return std::nullopt;
  }
  if (f.poly.degree() >= 1) f.roots = solve_quadratic_exact(f.poly);
  return f;
}

RootInfo make_root(const RootInterval& iv, const std::optional<ReducedForm>& form) {
  RootInfo r;
  r.c_interval = iv;
  r.c = iv.midpoint();
  r.psi = std::atan2(1.0, r.c);
  r.psi_over_pi = r.psi / std::numbers::pi;
  if (form) {
    double x = form->map(r.c);
    for (const auto& q : form->roots) {
      double v = q.value.to_double();
      if (std::abs(v - x) <= 1e-7 * std::max(1.0, std::abs(x))) {
        r.closed_form = ClosedForm{form->variable, q.value};
        break;
      }
    }
  }
  return r;
}

std::vector<RootInfo> roots_in(const Poly& p, const Interval& dom, const std::optional<ReducedForm>& form) {
  std::vector<RootInfo> out;
  if (p.degree() < 1) return out;
  for (const auto& iv : isolate_real_roots(p, dom)) out.push_back(make_root(iv, form));
  std::sort(out.begin(), out.end(), [](const RootInfo& a, const RootInfo& b) { return a.psi < b.psi; });
  return out;
}

void finish_category(ClassificationResult& r) {
  if (r.all_biharmonic) {
    r.category = Category::Other;
    return;
  }
  r.category = category_from_count(r.proper_roots.size());
  r.interleaved.reset();
  if (r.proper_roots.size() == 2 && !r.harmonic_roots.empty()) {
    double lo = std::min(r.proper_roots[0].c, r.proper_roots[1].c);
    double hi = std::max(r.proper_roots[0].c, r.proper_roots[1].c);
    bool between = std::any_of(r.harmonic_roots.begin(), r.harmonic_roots.end(),
                               [&](const RootInfo& h) { return lo < h.c && h.c < hi; });
    r.interleaved = between;
  }
}

std::optional<long> codim_for(const CatalogEntry& entry, const Params& params, int edge_index) {
  if (entry.codim.empty()) return std::nullopt;
  size_t idx = entry.codim.size() == 1 ? 0 : static_cast<size_t>(edge_index - 1);
  if (idx >= entry.codim.size()) return std::nullopt;
  Rational v = entry.codim[idx].eval(params);
  return v.get_num().get_si();
}

Params complete_params(const CatalogEntry& entry, const Params& given) {
  Params out = given;
  auto names = entry.param_names();
  bool missing = std::any_of(names.begin(), names.end(), [&](const std::string& n) { return !out.count(n); });
  if (missing) {
    Params defaults = entry.default_params();
    for (const auto& [k, v] : defaults)
      if (!out.count(k)) out[k] = v;
  }
  return out;
}

// Rational function through all samples with the smallest total degree.
std::optional<RationalFn> interpolate(const std::vector<std::pair<long, Rational>>& samples) {
  int n = static_cast<int>(samples.size());
  for (int total = 0; total + 2 <= n && total <= 12; ++total) {
    for (int dm = 0; dm <= total; ++dm) {
      int dn = total - dm;
      int unknowns = dn + 1 + dm;
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (int i = 0; i < unknowns; ++i) {
        Rational q(samples[i].first);
        const Rational& d = samples[i].second;
        std::vector<Rational> row;
        Rational pw = 1;
        for (int j = 0; j <= dn; ++j, pw *= q) row.push_back(pw);
        pw = 1;
        for (int j = 0; j < dm; ++j, pw *= q) row.push_back(-d * pw);
        a.push_back(row);
        b.push_back(d * pw);
      }
      std::vector<Rational> x;
      try {
        x = solve_linear(a, b);
      } catch (const AlgebraError&) {
        continue;
      }
      std::vector<Rational> num(x.begin(), x.begin() + dn + 1);
      std::vector<Rational> den(x.begin() + dn + 1, x.end());
      den.push_back(1);
      Poly pn(num), pd(den);
      bool ok = true;
      for (const auto& [q, d] : samples) {
        Rational qq(q);
        Rational dv = pd.eval(qq);
        if (dv == 0 || pn.eval(qq) != d * dv) {
          ok = false;
          break;
        }
      }
      if (ok) return RationalFn(pn, pd);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(Category c) {
  switch (c) {
    case Category::I: return "i";
    case Category::II: return "ii";
    case Category::III: return "iii";
    case Category::Other: return "other";
  }
  return "other";
}

Category category_from_count(std::size_t n) {
  if (n == 0) return Category::III;
  if (n == 1) return Category::I;
  if (n == 2) return Category::II;
  return Category::Other;
}

std::string ClosedForm::to_string() const { return variable + " = " + value.to_string(); }

double ReducedForm::map(double c) const {
  double x = level == 0 ? c : (c * c - 1) / (2 * c);
  return squared ? x * x : x;
}

std::optional<ReducedForm> reduce_to_quadratic(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  return attempt(p, 0);
}

ClassificationResult classify_family(const SymmetricTriad& triad, const Stratum& edge, ActionKind action) {
  ClassificationResult r;
  r.family = triad.name;
  r.type = triad.type;
  r.kind = triad.kind;
  r.rank = triad.rank;
  r.params = triad.params;
  r.edge_label = edge.label();
  r.edge_index = edge.edge_index;
  r.action = action;

  EdgeParam ep = parametrize_edge(triad, edge);
  r.base_scale = ep.base_scale;
  r.psi_domain = ep.psi_domain_string();
  r.c_domain = ep.c_domain;

  TensionField tf = tension_field(triad, ep, action);
  HarmonicPolynomial harm = harmonic_polynomial(tf);
  r.harmonic_poly = harm.poly;
  if (harm.all_harmonic) {
    r.all_harmonic = true;
    r.category = Category::III;
    r.proper_poly = Poly::constant(1);
    r.note = "tension vanishes identically";
    return r;
  }
  r.harmonic_roots = roots_in(harm.poly, ep.c_domain, reduce_to_quadratic(harm.poly));

  CriterionPolynomial crit = build_criterion(triad, ep, tf, action);
  if (crit.identically_zero) {
    r.all_biharmonic = true;
    r.note = "criterion vanishes identically";
    finish_category(r);
    return r;
  }
  r.criterion_poly = crit.poly;
  r.proper_poly = proper_part(crit, harm.poly);
  r.proper_reduced = reduce_to_quadratic(r.proper_poly);
  r.proper_roots = roots_in(r.proper_poly, ep.c_domain, r.proper_reduced);
  finish_category(r);
  return r;
}

ClassificationResult classify_family(const CatalogEntry& entry, const Params& params, const Stratum& edge,
                                     ActionKind action) {
  Params full = complete_params(entry, params);
  SymmetricTriad t = entry.instantiate(full);
  ClassificationResult r = classify_family(t, edge, action);
  r.codim = codim_for(entry, full, edge.edge_index);
  r.multiplicities = entry.multiplicity_label();
  r.source = entry.source;
  return r;
}

ClassificationResult reclassify_with(const ClassificationResult& base, const Poly& proper) {
  ClassificationResult r = base;
  r.proper_poly = proper;
  r.proper_reduced = reduce_to_quadratic(proper);
  Poly sq = proper.degree() >= 1 ? squarefree_part(proper) : proper;
  r.proper_roots = roots_in(sq, r.c_domain, r.proper_reduced);
  finish_category(r);
  return r;
}

std::vector<ClassificationResult> classify_entry(const CatalogEntry& entry, const Params& params, ActionKind action) {
  Params full = complete_params(entry, params);
  SymmetricTriad t = entry.instantiate(full);
  std::vector<ClassificationResult> out;
  for (const auto& e : edges(t)) out.push_back(classify_family(entry, full, e, action));
  return out;
}

std::vector<ClassificationResult> classify_all(const Catalog& catalog, ActionKind action,
                                               const SuiteSelection& selection) {
  std::vector<const CatalogEntry*> chosen;
  for (const auto& e : catalog.entries()) {
    if (selection.rank && e.rank != *selection.rank) continue;
    if (selection.kind && e.kind() != *selection.kind) continue;
    chosen.push_back(&e);
  }
  std::vector<std::future<std::vector<ClassificationResult>>> jobs;
  for (const auto* e : chosen)
    jobs.push_back(std::async(std::launch::async, [e, action] { return classify_entry(*e, {}, action); }));
  std::vector<ClassificationResult> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

ThresholdReport threshold_scan(const CatalogEntry& entry, const std::string& param, long lo, long hi,
                               ActionKind action, const Params& fixed, const std::string& edge) {
  auto names = entry.param_names();
  if (std::find(names.begin(), names.end(), param) == names.end())
    throw CatalogError("family " + entry.name + " has no parameter " + param);
  if (lo > hi) throw CatalogError("empty scan range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  ThresholdReport rep;
  rep.family = entry.name;
  rep.param = param;
  rep.action = action;

  std::map<std::string, std::vector<std::pair<long, Rational>>> by_variable;
  for (long q = lo; q <= hi; ++q) {
    Params p = fixed;
    p[param] = q;
    Params full;
    try {
      full = complete_params(entry, p);
      full[param] = q;
      SymmetricTriad t = entry.instantiate(full);
      Stratum st = find_edge(t, edge);
      rep.edge_label = st.label();
      ClassificationResult r = classify_family(t, st, action);
      rep.per_integer.push_back({q, r.category});
      if (r.proper_reduced && r.proper_reduced->poly.degree() == 2) {
        Poly m = r.proper_reduced->poly.monic();
        by_variable[r.proper_reduced->variable].push_back({q, m.coeff(1) * m.coeff(1) - 4 * m.coeff(0)});
      }
    } catch (const CatalogError&) {
      continue;
    }
  }

  for (const auto& [q, c] : rep.per_integer) {
    if (!rep.regimes.empty() && rep.regimes.back().category == c && rep.regimes.back().hi == q - 1)
      rep.regimes.back().hi = q;
    else
      rep.regimes.push_back({q, q, c});
  }

  std::vector<std::pair<long, Rational>> samples;
  for (const auto& [var, pts] : by_variable)
    if (pts.size() > samples.size()) samples = pts;
  if (samples.size() < 3) {
    rep.note = "reduced criterion is not quadratic; exhaustive scan only";
    return rep;
  }
  auto disc = interpolate(samples);
  if (!disc) {
    rep.note = "discriminant is not a low-degree rational function of " + param;
    return rep;
  }
  rep.discriminant = disc;
  std::vector<Poly> factors;
  if (disc->num().degree() >= 1) factors.push_back(squarefree_part(disc->num()));
  if (disc->den().degree() >= 1) factors.push_back(squarefree_part(disc->den()));
  std::vector<std::pair<double, std::string>> found;
  for (const auto& f : factors) {
    if (f.degree() <= 2) {
      for (const auto& root : solve_quadratic_exact(f)) found.push_back({root.value.to_double(), root.value.to_string()});
    } else {
      for (const auto& iv : isolate_real_roots(f, Interval::real_line()))
        found.push_back({iv.midpoint(), std::to_string(iv.midpoint())});
    }
  }
  std::sort(found.begin(), found.end());
  for (const auto& [v, s] : found) {
    rep.thresholds.push_back(v);
    rep.threshold_forms.push_back(s);
  }
  for (const auto& [q, c] : rep.per_integer)
    if (disc->num().eval(Rational(q)) == 0) rep.degenerate_points.push_back(q);

  // Segments between consecutive thresholds must be uniform.
  auto segment = [&](long q) {
    int s = 0;
    for (double t : rep.thresholds)
      if (static_cast<double>(q) > t) s += 2;
      else if (static_cast<double>(q) == t) return s + 1;
    return s;
  };
  std::map<int, Category> seen;
  for (const auto& [q, c] : rep.per_integer) {
    if (std::find(rep.degenerate_points.begin(), rep.degenerate_points.end(), q) != rep.degenerate_points.end()) {
      if (c != Category::I) rep.consistent = false;
      continue;
    }
    auto [it, fresh] = seen.insert({segment(q), c});
    if (!fresh && it->second != c) rep.consistent = false;
  }
  return rep;
}

}  // namespace biharm
