#include "biharm/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace biharm {

namespace {

using nlohmann::json;

const char kBuiltinCatalog[] =
#include "biharm/catalog_data.inc"
    ;

// Recursive-descent parser for affine integer expressions.
class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : s_(text) {}

  AffineExpr parse() {
    AffineExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw CatalogError("bad expression \"" + s_ + "\": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char ch = s_[pos_];
    return ch == '(' || std::isalpha(static_cast<unsigned char>(ch)) || std::isdigit(static_cast<unsigned char>(ch));
  }

  AffineExpr expr() {
    AffineExpr e = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        e = e + term();
      } else if (peek('-')) {
        ++pos_;
        e = e - term();
      } else {
        return e;
      }
    }
  }

  AffineExpr term() {
    AffineExpr e = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        e = multiply(e, unary());
      } else if (peek('/')) {
        ++pos_;
        AffineExpr d = unary();
        if (!d.is_constant() || d.constant() == 0) fail("division by a non-constant or zero");
        e = e.scaled(1 / d.constant());
      } else if (starts_factor()) {
        e = multiply(e, factor());
      } else {
        return e;
      }
    }
  }

  AffineExpr unary() {
    if (peek('-')) {
      ++pos_;
      return unary().scaled(-1);
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return factor();
  }

  AffineExpr factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      AffineExpr e = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return AffineExpr(Rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return AffineExpr::parse_variable(s_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  AffineExpr multiply(const AffineExpr& x, const AffineExpr& y) {
    if (x.is_constant()) return y.scaled(x.constant());
    if (y.is_constant()) return x.scaled(y.constant());
    fail("product of parameters is not affine");
  }

  std::string s_;
  size_t pos_ = 0;
};

std::string normalize_name(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

Rational json_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw CatalogError(where + ": expected an integer or \"p/q\" string");
}

std::vector<RootVector> json_roots(const json& v, int rank, const std::string& where) {
  if (!v.is_array()) throw CatalogError(where + ": expected an array of roots");
  std::vector<RootVector> out;
  for (const auto& r : v) {
    if (!r.is_array() || static_cast<int>(r.size()) != rank)
      throw CatalogError(where + ": root dimension does not match rank");
    RootVector root;
    for (const auto& x : r) root.push_back(json_rational(x, where));
    out.push_back(std::move(root));
  }
  return out;
}

std::vector<AffineExpr> json_multiplicities(const json& v, size_t count, const std::string& where) {
  std::vector<AffineExpr> out(count);
  if (count == 0 && (v.is_null() || v.empty())) return out;
  if (!v.is_object()) throw CatalogError(where + ": expected an object keyed by root index");
  std::vector<bool> seen(count, false);
  for (auto it = v.begin(); it != v.end(); ++it) {
    size_t idx = 0;
    try {
      size_t used = 0;
      idx = std::stoul(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("index");
    } catch (const std::exception&) {
      throw CatalogError(where + ": bad root index \"" + it.key() + "\"");
    }
    if (idx >= count) throw CatalogError(where + ": root index " + it.key() + " out of range");
    if (it->is_number_integer())
      out[idx] = AffineExpr(Rational(it->get<long>()));
    else if (it->is_string())
      out[idx] = AffineExpr::parse(it->get<std::string>());
    else
      throw CatalogError(where + ": multiplicity must be an integer or expression string");
    seen[idx] = true;
  }
  for (size_t i = 0; i < count; ++i)
    if (!seen[i]) throw CatalogError(where + ": missing multiplicity for root " + std::to_string(i));
  return out;
}

CatalogEntry parse_entry(const json& j) {
  static const std::set<std::string> known = {"name", "type", "rank", "gram", "sigma_plus", "w_plus",
                                              "m", "n", "constraints", "source", "codim", "multiplicities"};
  if (!j.is_object()) throw CatalogError("catalog entry must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw CatalogError("unknown field \"" + it.key() + "\"");
  for (const char* req : {"name", "type", "rank", "gram", "sigma_plus", "m"})
    if (!j.contains(req)) throw CatalogError(std::string("missing field \"") + req + "\"");

  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  const std::string where = "entry \"" + e.name + "\"";
  e.type = j.at("type").get<std::string>();
  e.rank = j.at("rank").get<int>();
  if (e.rank != 1 && e.rank != 2) throw CatalogError(where + ": rank must be 1 or 2");
  const json& g = j.at("gram");
  if (!g.is_array() || static_cast<int>(g.size()) != e.rank) throw CatalogError(where + ": gram size");
  for (const auto& row : g) {
    if (!row.is_array() || static_cast<int>(row.size()) != e.rank) throw CatalogError(where + ": gram size");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(json_rational(x, where));
    e.gram.push_back(std::move(r));
  }
  e.sigma_plus = json_roots(j.at("sigma_plus"), e.rank, where);
  if (j.contains("w_plus")) e.w_plus = json_roots(j.at("w_plus"), e.rank, where);
  e.m = json_multiplicities(j.at("m"), e.sigma_plus.size(), where + " m");
  e.n = json_multiplicities(j.contains("n") ? j.at("n") : json::object(), e.w_plus.size(), where + " n");
  if (j.contains("constraints"))
    for (const auto& c : j.at("constraints")) e.constraints.push_back(Constraint::parse(c.get<std::string>()));
  if (j.contains("codim"))
    for (const auto& c : j.at("codim")) {
      if (c.is_number_integer())
        e.codim.push_back(AffineExpr(Rational(c.get<long>())));
      else
        e.codim.push_back(AffineExpr::parse(c.get<std::string>()));
    }
  if (j.contains("source")) e.source = j.at("source").get<std::string>();
  if (j.contains("multiplicities")) e.display_multiplicities = j.at("multiplicities").get<std::string>();
  return e;
}

bool same_root(const RootVector& a, const RootVector& b) { return a == b; }

RootVector negate(const RootVector& r) {
  RootVector out(r);
  for (auto& x : out) x = -x;
  return out;
}

bool contains_root(const std::vector<RootVector>& set, const RootVector& r) {
  return std::any_of(set.begin(), set.end(), [&](const RootVector& s) { return same_root(s, r); });
}

bool contains_up_to_sign(const std::vector<RootVector>& set, const RootVector& r) {
  return contains_root(set, r) || contains_root(set, negate(r));
}

RootVector reflect(const SymmetricTriad& t, const RootVector& x, const RootVector& r) {
  Rational k = 2 * t.inner(x, r) / t.inner(r, r);
  RootVector out(x);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= k * r[i];
  return out;
}

// Closure of a positive system under its own reflections, with integral Cartan numbers.
void check_closed(const SymmetricTriad& t, const std::vector<RootVector>& roots, const std::string& label,
                  std::vector<std::string>& out) {
  for (const auto& r : roots)
    for (const auto& s : roots) {
      Rational k = 2 * t.inner(s, r) / t.inner(r, r);
      if (k.get_den() != 1) {
        out.push_back(label + ": non-integral Cartan number between " + root_to_string(s) + " and " +
                      root_to_string(r));
        continue;
      }
      RootVector img = reflect(t, s, r);
      if (!contains_up_to_sign(roots, img))
        out.push_back(label + ": reflection of " + root_to_string(s) + " in " + root_to_string(r) +
                      " is not a root");
    }
}

// Positive rational combination test for rank <= 2: x = p*a + q*b with p, q >= 0.
bool positive_combination(const SymmetricTriad& t, const RootVector& x, const RootVector& a, const RootVector& b) {
  if (t.rank == 1) return false;
  Rational det = a[0] * b[1] - a[1] * b[0];
  if (det == 0) return false;
  Rational p = (x[0] * b[1] - x[1] * b[0]) / det;
  Rational q = (a[0] * x[1] - a[1] * x[0]) / det;
  return p > 0 && q > 0;
}

bool parallel(const RootVector& a, const RootVector& b) {
  if (a.size() == 1) return true;
  return a[0] * b[1] - a[1] * b[0] == 0;
}

}  // namespace

AffineExpr AffineExpr::parse_variable(const std::string& name) {
  AffineExpr e;
  e.coeffs_[name] = 1;
  return e;
}

AffineExpr AffineExpr::parse(const std::string& text) { return ExprParser(text).parse(); }

Rational AffineExpr::eval(const Params& params) const {
  Rational v = constant_;
  for (const auto& [name, k] : coeffs_) {
    auto it = params.find(name);
    if (it == params.end()) throw CatalogError("missing value for parameter " + name);
    v += k * Rational(it->second);
  }
  return v;
}

std::set<std::string> AffineExpr::params() const {
  std::set<std::string> out;
  for (const auto& [name, k] : coeffs_) out.insert(name);
  return out;
}

std::string AffineExpr::to_string() const {
  std::string s;
  for (const auto& [name, k] : coeffs_) {
    if (k < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    Rational a = abs(k);
    if (a != 1) s += biharm::to_string(a);
    s += name;
  }
  if (constant_ != 0 || s.empty()) {
    if (constant_ < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    s += biharm::to_string(abs(constant_));
  }
  return s;
}

AffineExpr AffineExpr::operator+(const AffineExpr& o) const {
  AffineExpr r(*this);
  r.constant_ += o.constant_;
  for (const auto& [name, k] : o.coeffs_) {
    r.coeffs_[name] += k;
    if (r.coeffs_[name] == 0) r.coeffs_.erase(name);
  }
  return r;
}

AffineExpr AffineExpr::operator-(const AffineExpr& o) const { return *this + o.scaled(-1); }

AffineExpr AffineExpr::scaled(const Rational& s) const {
  AffineExpr r;
  r.constant_ = constant_ * s;
  if (s != 0)
    for (const auto& [name, k] : coeffs_) r.coeffs_[name] = k * s;
  return r;
}

Constraint Constraint::parse(const std::string& text) {
  static const std::vector<std::pair<std::string, Op>> ops = {{"<=", Op::Le}, {">=", Op::Ge}, {"==", Op::Eq},
                                                              {"!=", Op::Ne}, {"<", Op::Lt},  {">", Op::Gt}};
  for (const auto& [tok, op] : ops) {
    auto pos = text.find(tok);
    if (pos == std::string::npos) continue;
    Constraint c;
    c.lhs = AffineExpr::parse(text.substr(0, pos));
    c.rhs = AffineExpr::parse(text.substr(pos + tok.size()));
    c.op = op;
    c.text = text;
    return c;
  }
  throw CatalogError("constraint \"" + text + "\" has no comparison operator");
}

bool Constraint::holds(const Params& params) const {
  Rational l = lhs.eval(params);
  Rational r = rhs.eval(params);
  switch (op) {
    case Op::Lt: return l < r;
    case Op::Le: return l <= r;
    case Op::Gt: return l > r;
    case Op::Ge: return l >= r;
    case Op::Eq: return l == r;
    case Op::Ne: return l != r;
  }
  return false;
}

std::string to_string(TriadKind k) { return k == TriadKind::Isotropy ? "isotropy" : "hermann"; }

Rational SymmetricTriad::inner(const RootVector& x, const RootVector& y) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += x[i] * gram[i][j] * y[j];
  return s;
}

std::vector<RootVector> SymmetricTriad::tilde_plus() const {
  std::vector<RootVector> out;
  for (const auto& r : sigma_plus)
    if (!contains_root(out, r)) out.push_back(r);
  for (const auto& r : w_plus)
    if (!contains_root(out, r)) out.push_back(r);
  return out;
}

std::vector<std::string> CatalogEntry::param_names() const {
  std::set<std::string> names;
  auto add = [&](const AffineExpr& e) {
    auto p = e.params();
    names.insert(p.begin(), p.end());
  };
  for (const auto& e : m) add(e);
  for (const auto& e : n) add(e);
  for (const auto& e : codim) add(e);
  for (const auto& c : constraints) {
    add(c.lhs);
    add(c.rhs);
  }
  return {names.begin(), names.end()};
}

Params CatalogEntry::default_params() const {
  Params out;
  for (const auto& name : param_names()) {
    long chosen = -1;
    for (long v = 1; v <= 10000 && chosen < 0; ++v) {
      bool ok = true;
      for (const auto& c : constraints) {
        auto used = c.lhs.params();
        auto r = c.rhs.params();
        used.insert(r.begin(), r.end());
        if (used.size() != 1 || !used.count(name)) continue;
        if (!c.holds({{name, v}})) ok = false;
      }
      if (ok) chosen = v;
    }
    if (chosen < 0) throw CatalogError("no admissible value for parameter " + name + " of " + this->name);
    out[name] = chosen;
  }
  for (const auto& c : constraints)
    if (!c.holds(out)) throw CatalogError("default parameters of " + name + " violate " + c.text);
  return out;
}

SymmetricTriad CatalogEntry::instantiate(const Params& params) const {
  Params full;
  auto names = param_names();
  for (const auto& nm : names) {
    auto it = params.find(nm);
    if (it == params.end()) throw CatalogError("missing value for parameter " + nm + " of " + name);
    full[nm] = it->second;
  }
  for (const auto& [k, v] : params)
    if (!full.count(k)) throw CatalogError("unknown parameter " + k + " for " + name);
  for (const auto& c : constraints)
    if (!c.holds(full)) throw CatalogError("constraint " + c.text + " violated for " + name);

  SymmetricTriad t;
  t.name = name;
  t.type = type;
  t.rank = rank;
  t.kind = kind();
  t.gram = gram;
  t.sigma_plus = sigma_plus;
  t.w_plus = w_plus;
  t.params = full;
  auto to_long = [&](const AffineExpr& e) {
    Rational v = e.eval(full);
    if (v.get_den() != 1) throw CatalogError("non-integer multiplicity " + e.to_string() + " for " + name);
    return v.get_num().get_si();
  };
  for (const auto& e : m) t.m.push_back(to_long(e));
  for (const auto& e : n) t.n.push_back(to_long(e));
  return t;
}

std::string CatalogEntry::multiplicity_label() const {
  if (!display_multiplicities.empty()) return display_multiplicities;
  // One value per distinct (set, expression) in catalog order, as the tables list them.
  std::vector<std::string> parts;
  std::vector<std::string> seen;
  auto add = [&](const std::vector<RootVector>& roots, const std::vector<AffineExpr>& mult, const std::string& tag) {
    for (size_t i = 0; i < roots.size(); ++i) {
      std::string key = tag + mult[i].to_string();
      bool shared = tag == "n" && std::any_of(sigma_plus.begin(), sigma_plus.end(), [&](const RootVector& r) {
                      if (r != roots[i]) return false;
                      size_t k = &r - sigma_plus.data();
                      return m[k].to_string() == mult[i].to_string();
                    });
      if (shared) continue;
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      parts.push_back(mult[i].to_string());
    }
  };
  add(sigma_plus, m, "m");
  add(w_plus, n, "n");
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + ")";
}

Catalog Catalog::builtin() { return from_json(kBuiltinCatalog); }

Catalog Catalog::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
      if (it.key() != "entries") throw CatalogError("unknown top-level field \"" + it.key() + "\"");
    if (!doc.contains("entries")) throw CatalogError("catalog object lacks \"entries\"");
    list = &doc.at("entries");
  }
  if (!list->is_array()) throw CatalogError("catalog must be an array of entries");
  Catalog c;
  std::set<std::string> names;
  try {
    for (const auto& j : *list) {
      CatalogEntry e = parse_entry(j);
      if (!names.insert(normalize_name(e.name)).second) throw CatalogError("duplicate entry \"" + e.name + "\"");
      c.entries_.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw CatalogError(std::string("catalog field has the wrong type: ") + e.what());
  }
  return c;
}

Catalog Catalog::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot read catalog file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

Catalog Catalog::from_env_or_builtin() {
  const char* path = std::getenv("TRIAD_CATALOG_PATH");
  if (path && *path) return from_file(path);
  return builtin();
}

const CatalogEntry& Catalog::entry(const std::string& name) const {
  std::string key = normalize_name(name);
  for (const auto& e : entries_)
    if (normalize_name(e.name) == key) return e;
  const CatalogEntry* hit = nullptr;
  for (const auto& e : entries_) {
    if (normalize_name(e.name).rfind(key, 0) != 0) continue;
    if (hit) throw CatalogError("ambiguous triad name \"" + name + "\"");
    hit = &e;
  }
  if (!hit) throw CatalogError("unknown triad \"" + name + "\"");
  return *hit;
}

SymmetricTriad Catalog::lookup(const std::string& name, const Params& params) const {
  const CatalogEntry& e = entry(name);
  Params full = params;
  if (full.empty() && !e.param_names().empty()) full = e.default_params();
  return e.instantiate(full);
}

std::vector<const CatalogEntry*> Catalog::enumerate_families(const FamilyFilter& filter) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (filter.rank && e.rank != *filter.rank) continue;
    if (filter.kind && e.kind() != *filter.kind) continue;
    if (filter.type && e.type != *filter.type) continue;
    out.push_back(&e);
  }
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
    if (a->type != b->type) return a->type < b->type;
    return a->name < b->name;
  });
  return out;
}

std::vector<std::string> validate(const SymmetricTriad& t) {
  std::vector<std::string> out;
  if (t.rank != 1 && t.rank != 2) {
    out.push_back("rank must be 1 or 2");
    return out;
  }
  bool gram_ok = static_cast<int>(t.gram.size()) == t.rank;
  for (const auto& row : t.gram) gram_ok = gram_ok && static_cast<int>(row.size()) == t.rank;
  if (!gram_ok) {
    out.push_back("gram matrix has the wrong size");
    return out;
  }
  if (t.rank == 2 && t.gram[0][1] != t.gram[1][0]) out.push_back("gram matrix is not symmetric");
  Rational det = t.rank == 1 ? t.gram[0][0] : t.gram[0][0] * t.gram[1][1] - t.gram[0][1] * t.gram[1][0];
  if (t.gram[0][0] <= 0 || det <= 0) out.push_back("gram matrix is not positive definite");
  if (!out.empty()) return out;

  auto check_roots = [&](const std::vector<RootVector>& roots, const std::string& label) {
    for (const auto& r : roots) {
      if (static_cast<int>(r.size()) != t.rank)
        out.push_back(label + ": root dimension does not match rank");
      else if (std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; }))
        out.push_back(label + ": zero root");
    }
  };
  check_roots(t.sigma_plus, "sigma_plus");
  check_roots(t.w_plus, "w_plus");
  if (!out.empty()) return out;
  if (t.sigma_plus.empty()) out.push_back("sigma_plus is empty");
  if (t.m.size() != t.sigma_plus.size()) out.push_back("m has the wrong length");
  if (t.n.size() != t.w_plus.size()) out.push_back("n has the wrong length");
  if (!out.empty()) return out;

  for (size_t i = 0; i < t.m.size(); ++i)
    if (t.m[i] <= 0) out.push_back("positivity: m(" + root_to_string(t.sigma_plus[i]) + ") is not positive");
  for (size_t i = 0; i < t.n.size(); ++i)
    if (t.n[i] <= 0) out.push_back("positivity: n(" + root_to_string(t.w_plus[i]) + ") is not positive");

  if (t.kind == TriadKind::Isotropy && !t.w_plus.empty()) out.push_back("isotropy triad has a nonempty W");
  if (t.kind == TriadKind::Hermann && t.w_plus.empty()) out.push_back("hermann triad has an empty W");

  check_closed(t, t.tilde_plus(), "root system", out);
  check_closed(t, t.sigma_plus, "Sigma", out);
  check_closed(t, t.w_plus, "W", out);

  for (size_t i = 0; i < t.sigma_plus.size(); ++i) {
    const RootVector& lam = t.sigma_plus[i];
    auto wi = std::find(t.w_plus.begin(), t.w_plus.end(), lam);
    if (wi == t.w_plus.end()) continue;
    long nv = t.n[wi - t.w_plus.begin()];
    for (const auto& a : t.w_plus) {
      Rational k = 2 * t.inner(lam, a) / t.inner(a, a);
      if (k.get_den() != 1 || k.get_num() % 2 == 0) continue;
      if (t.m[i] != nv)
        out.push_back("odd-pairing rule: m(" + root_to_string(lam) + ") != n(" + root_to_string(lam) +
                      ") although 2<" + root_to_string(lam) + "," + root_to_string(a) + ">/<" +
                      root_to_string(a) + "," + root_to_string(a) + "> is odd");
      break;
    }
  }

  if (out.empty()) {
    try {
      auto simple = simple_roots(t);
      if (static_cast<int>(simple.size()) != t.rank) out.push_back("fundamental system has the wrong size");
      top_root(t);
    } catch (const CatalogError& e) {
      out.push_back(e.what());
    }
  }
  return out;
}

std::vector<RootVector> simple_roots(const SymmetricTriad& t) {
  auto all = t.tilde_plus();
  std::vector<RootVector> extreme;
  for (const auto& x : all) {
    bool interior = false;
    for (const auto& a : all)
      for (const auto& b : all)
        if (!interior && positive_combination(t, x, a, b)) interior = true;
    if (interior) continue;
    // Keep the shortest vector on each ray.
    bool replaced = false;
    for (auto& e : extreme) {
      if (!parallel(e, x)) continue;
      Rational ratio = 0;
      for (size_t i = 0; i < x.size(); ++i)
        if (e[i] != 0) ratio = x[i] / e[i];
      if (ratio < 0) throw CatalogError("positive roots contain a root and its negative");
      if (ratio < 1) e = x;
      replaced = true;
    }
    if (!replaced) extreme.push_back(x);
  }
  if (static_cast<int>(extreme.size()) != t.rank) throw CatalogError("cannot extract a fundamental system");
  return extreme;
}

std::vector<Rational> simple_coordinates(const SymmetricTriad& t, const std::vector<RootVector>& simple,
                                         const RootVector& root) {
  if (t.rank == 1) return {root[0] / simple[0][0]};
  std::vector<std::vector<Rational>> a = {{simple[0][0], simple[1][0]}, {simple[0][1], simple[1][1]}};
  return solve_linear(a, {root[0], root[1]});
}

RootVector top_root(const SymmetricTriad& t) {
  auto simple = simple_roots(t);
  std::vector<RootVector> pool = t.kind == TriadKind::Isotropy ? t.sigma_plus : t.w_plus;
  std::vector<RootVector> tops;
  for (const auto& r : pool) {
    bool maximal = true;
    for (const auto& s : simple) {
      RootVector sum(r);
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += s[i];
      if (contains_root(pool, sum)) maximal = false;
    }
    // Positive multiples of a root in the pool also dominate it.
    for (const auto& other : pool)
      if (other != r && parallel(other, r)) {
        Rational ratio = 0;
        for (size_t i = 0; i < r.size(); ++i)
          if (r[i] != 0) ratio = other[i] / r[i];
        if (ratio > 1) maximal = false;
      }
    if (maximal) tops.push_back(r);
  }
  const char* what = t.kind == TriadKind::Isotropy ? "highest root" : "alpha-tilde";
  if (tops.size() != 1) throw CatalogError(std::string(what) + " is not unique");
  return tops.front();
}

std::string root_to_string(const RootVector& r) {
  std::string s = "[";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + to_string(r[i]);
  return s + "]";
}

}  // namespace biharm
