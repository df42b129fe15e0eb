#include "biharm/exact.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace biharm {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch != ' ') t.push_back(ch);
  }
  if (t.empty()) throw AlgebraError("empty rational literal");
  auto slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw AlgebraError("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw AlgebraError("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

double to_double(const Rational& r) { return r.get_d(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Poly::Poly(std::initializer_list<long> ascending) {
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::var() { return monomial(1, 1); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::primitive() const {
  if (c_.empty()) return {};
  Integer l(1);
  for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g(0);
  for (const auto& x : c_) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (leading() < 0) s = -s;
  return *this * s;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

bool Poly::is_even() const {
  for (size_t i = 1; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

bool Poly::is_odd() const {
  for (size_t i = 0; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

Poly Poly::even_part_in_square() const {
  if (!is_even()) throw AlgebraError("polynomial is not even");
  std::vector<Rational> r;
  for (size_t i = 0; i < c_.size(); i += 2) r.push_back(c_[i]);
  return Poly(std::move(r));
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[static_cast<size_t>(i)];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(), a};
  std::vector<Rational> q(static_cast<size_t>(da - db) + 1, Rational(0));
  Rational inv = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    Rational f = rem[static_cast<size_t>(i)] * inv;
    if (f == 0) continue;
    q[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  DivMod dm = divmod(a, b);
  if (!dm.rem.is_zero()) throw AlgebraError("inexact polynomial division");
  return dm.quot;
}

bool divides(const Poly& d, const Poly& p) { return divmod(p, d).rem.is_zero(); }

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw AlgebraError("undefined gcd");
  Poly a = p.monic(), b = q.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).rem;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw AlgebraError("squarefree part of zero polynomial");
  if (p.degree() == 0) return Poly::constant(1);
  Poly g = poly_gcd(p, p.derivative());
  return exact_div(p, g).monic();
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw AlgebraError("rational function with zero denominator");
  reduce();
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational l = den_.leading();
  if (l != 1) {
    num_ *= 1 / l;
    den_ *= 1 / l;
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.reciprocal(); }

RationalFn operator*(const Rational& s, const RationalFn& a) {
  RationalFn r = a;
  r.num_ *= s;
  if (r.num_.is_zero()) r.den_ = Poly::constant(1);
  return r;
}

Rational RationalFn::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw AlgebraError("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

double RationalFn::eval(double x) const { return num_.eval(x) / den_.eval(x); }

RationalFn RationalFn::reciprocal() const {
  if (num_.is_zero()) throw AlgebraError("reciprocal of zero rational function");
  return RationalFn(den_, num_);
}

std::string RationalFn::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------------- QuadraticSurd

namespace {

// n = s^2 * d with d square-free, n >= 0.
void split_square(const Integer& n, Integer& s, Integer& d) {
  s = 1;
  d = 1;
  if (n == 0) {
    s = 0;
    return;
  }
  Integer r = n;
  for (unsigned long p = 2;; ++p) {
    Integer pp(p);
    if (pp * pp * pp > r) break;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      r /= p;
      if (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
        r /= p;
        s *= p;
      } else {
        d *= p;
      }
    }
  }
  // r has at most two prime factors left.
  if (r > 1 && mpz_perfect_square_p(r.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), r.get_mpz_t());
    s *= root;
  } else {
    d *= r;
  }
}

// Sign of e + f*sqrt(g) with rational g >= 0.
int sign_sum(const Rational& e, const Rational& f, const Rational& g) {
  int se = sgn(e);
  int sf = (g == 0) ? 0 : sgn(f);
  if (sf == 0) return se;
  if (se == 0) return sf;
  if (se == sf) return se;
  Rational lhs = e * e, rhs = f * f * g;
  if (lhs == rhs) return 0;
  return lhs > rhs ? se : sf;
}

}  // namespace

QuadraticSurd::QuadraticSurd(const Rational& a) : a_(a), b_(0), d_(0) {}

QuadraticSurd::QuadraticSurd(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  if (d_ < 0) throw AlgebraError("negative radicand");
  normalize();
}

void QuadraticSurd::normalize() {
  if (d_ == 0 || b_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  Integer s, d;
  split_square(d_, s, d);
  b_ *= s;
  d_ = d;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

QuadraticSurd QuadraticSurd::sqrt_of(const Rational& r) {
  if (r < 0) throw AlgebraError("square root of a negative rational");
  if (r == 0) return QuadraticSurd(0);
  // sqrt(p/q) = sqrt(p*q)/q
  Integer pq = r.get_num() * r.get_den();
  Rational b(1, r.get_den());
  b.canonicalize();
  return QuadraticSurd(0, b, pq);
}

int QuadraticSurd::sign() const { return sign_sum(a_, b_, Rational(d_)); }

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

namespace {
Integer common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw AlgebraError("surds with different radicands cannot be combined");
}
}  // namespace

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  Integer d = common_radicand(x, y);
  return QuadraticSurd(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  Integer d = common_radicand(x, y);
  Rational dd(d);
  return QuadraticSurd(x.a_ * y.a_ + x.b_ * y.b_ * dd, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadraticSurd operator/(const QuadraticSurd& x, const Rational& y) {
  if (y == 0) throw AlgebraError("division of surd by zero");
  return QuadraticSurd(x.a_ / y, x.b_ / y, x.d_);
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational() || y.is_rational() || x.d_ == y.d_) return (x - y).sign();
  // (a1 - a2) + b1*sqrt(d1) - b2*sqrt(d2)
  Rational A = x.a_ - y.a_;
  Rational B = x.b_, C = -y.b_;
  Rational p(x.d_), q(y.d_);
  // sign of W = B*sqrt(p) + C*sqrt(q)
  int sb = sgn(B), sc = sgn(C);
  int sw;
  if (sb == sc || sc == 0) {
    sw = sb;
  } else if (sb == 0) {
    sw = sc;
  } else {
    Rational l = B * B * p, r = C * C * q;
    sw = (l == r) ? 0 : (l > r ? sb : sc);
  }
  int sa = sgn(A);
  if (sw == 0) return sa;
  if (sa == 0 || sa == sw) return sa == 0 ? sw : sa;
  // compare A^2 with W^2 = B^2 p + C^2 q + 2BC sqrt(pq)
  int s = sign_sum(A * A - B * B * p - C * C * q, -2 * B * C, p * q);
  if (s == 0) return 0;
  return s > 0 ? sa : sw;
}

QuadraticSurd QuadraticSurd::eval(const Poly& p) const {
  QuadraticSurd acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * *this + QuadraticSurd(*it);
  return acc;
}

double QuadraticSurd::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

Rational QuadraticSurd::approx(unsigned bits) const {
  if (is_rational()) return a_;
  unsigned k = bits + 2;
  // |b|*sqrt(d) = sqrt(num^2 * d) / den
  Integer n = b_.get_num();
  Integer radicand = n * n * d_;
  mpz_mul_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), 2 * k);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Integer scale(1);
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
  Rational part(root, scale * b_.get_den());
  part.canonicalize();
  if (b_ < 0) part = -part;
  return a_ + part;
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return a_.get_str();
  Integer D;
  mpz_lcm(D.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  Integer A = a_.get_num() * (D / a_.get_den());
  Integer B = b_.get_num() * (D / b_.get_den());
  std::string rad = "sqrt(" + d_.get_str() + ")";
  std::string bpart;
  Integer absb = abs(B);
  bpart = (absb == 1 ? "" : absb.get_str() + "*") + rad;
  std::string body;
  if (A == 0) {
    body = (B < 0 ? "-" : "") + bpart;
  } else {
    body = A.get_str() + (B < 0 ? "-" : "+") + bpart;
  }
  if (D == 1) return body;
  bool paren = (A != 0);
  return (paren ? "(" + body + ")" : body) + "/" + D.get_str();
}

// ---------------------------------------------------------------- Bound / Interval

double Bound::to_double() const {
  switch (kind) {
    case Kind::NegInf: return -INFINITY;
    case Kind::PosInf: return INFINITY;
    default: return value.to_double();
  }
}

std::string Bound::to_string() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    default: return value.to_string();
  }
}

int compare(const Bound& x, const Bound& y) {
  auto rank = [](const Bound& b) { return b.kind == Bound::Kind::NegInf ? 0 : (b.kind == Bound::Kind::Finite ? 1 : 2); };
  int rx = rank(x), ry = rank(y);
  if (rx != ry) return rx < ry ? -1 : 1;
  if (rx != 1) return 0;
  return compare(x.value, y.value);
}

Interval::Interval(Bound l, Bound h) : lo(std::move(l)), hi(std::move(h)) {
  if (compare(lo, hi) >= 0) throw AlgebraError("interval requires lo < hi");
}

bool Interval::contains(const QuadraticSurd& x) const {
  Bound b = Bound::at(x);
  return compare(lo, b) < 0 && compare(b, hi) < 0;
}

std::string Interval::to_string() const { return "(" + lo.to_string() + ", " + hi.to_string() + ")"; }

// ---------------------------------------------------------------- Sturm / isolation

int sign_at(const Poly& p, const Bound& x) {
  if (p.is_zero()) return 0;
  switch (x.kind) {
    case Bound::Kind::PosInf: return sgn(p.leading());
    case Bound::Kind::NegInf: return (p.degree() % 2 == 0 ? 1 : -1) * sgn(p.leading());
    default: return x.value.eval(p).sign();
  }
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).rem;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    seq.push_back(-r.primitive() * Rational(sgn(r.leading()) > 0 ? 1 : -1));
  }
  return seq;
}

namespace {

int variations(const std::vector<Poly>& seq, const Bound& x) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int count_with(const std::vector<Poly>& seq, const Bound& lo, const Bound& hi) {
  int n = variations(seq, lo) - variations(seq, hi);
  if (hi.finite() && sign_at(seq.front(), hi) == 0) --n;
  return n;
}

void require_squarefree(const Poly& p) {
  if (p.is_zero()) throw AlgebraError("zero polynomial has no isolated roots");
  if (!is_squarefree(p)) throw AlgebraError("non-squarefree input; take squarefree_part first");
}

Rational two_pow_neg(unsigned bits) {
  Integer den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return Rational(Integer(1), den);
}

Rational cauchy_bound(const Poly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = abs(p.coeff(i) / p.leading());
    if (q > m) m = q;
  }
  return m + 1;
}

// Rational strictly inside (lo, hi) for finite bounds.
Rational rational_between(const Bound& lo, const Bound& hi) {
  for (unsigned bits = 64;; bits *= 2) {
    Rational m = (lo.value.approx(bits) + hi.value.approx(bits)) / 2;
    Bound bm = Bound::at(m);
    if (compare(lo, bm) < 0 && compare(bm, hi) < 0) return m;
    if (bits > (1u << 20)) throw AlgebraError("cannot separate interval endpoints");
  }
}

// Tight rational interval around an exact rational root r inside (lo, hi).
RootInterval around_exact(const Poly& p, const Rational& r, const Bound& lo, const Bound& hi, unsigned bits) {
  Rational eps = two_pow_neg(bits + 1);
  while (true) {
    Rational a = r - eps, b = r + eps;
    if (compare(lo, Bound::at(a)) < 0 && compare(Bound::at(b), hi) < 0 && sgn(p.eval(a)) * sgn(p.eval(b)) < 0)
      return {a, b};
    eps /= 2;
  }
}

}  // namespace

int sturm_count(const Poly& p, const Interval& iv) {
  require_squarefree(p);
  if (p.degree() == 0) return 0;
  return count_with(sturm_sequence(p), iv.lo, iv.hi);
}

RootInterval refine_root(const Poly& p, RootInterval r, unsigned bits) {
  Rational width = two_pow_neg(bits);
  int slo = sgn(p.eval(r.lo));
  if (slo == 0 || sgn(p.eval(r.hi)) == 0 || slo == sgn(p.eval(r.hi)))
    throw AlgebraError("interval does not bracket a simple root");
  while (r.hi - r.lo > width) {
    Rational m = (r.lo + r.hi) / 2;
    int sm = sgn(p.eval(m));
    if (sm == 0) return around_exact(p, m, Bound::at(r.lo), Bound::at(r.hi), bits);
    if (sm == slo) {
      r.lo = m;
    } else {
      r.hi = m;
    }
  }
  return r;
}

std::vector<RootInterval> isolate_real_roots(const Poly& p, const Interval& iv) {
  constexpr unsigned kBits = 40;
  require_squarefree(p);
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  auto seq = sturm_sequence(p);
  Rational m = cauchy_bound(p);
  Bound lo = iv.lo.finite() ? iv.lo : Bound::at(QuadraticSurd(Rational(-m)));
  Bound hi = iv.hi.finite() ? iv.hi : Bound::at(QuadraticSurd(m));
  if (compare(lo, hi) >= 0) return out;

  // Single root in (a, b): make endpoints rational, then bisect by sign.
  auto usable = [&](const Bound& x) { return x.value.is_rational() && sign_at(p, x) != 0; };
  auto finish = [&](Bound a, Bound b) {
    while (!(usable(a) && usable(b))) {
      Rational mid = rational_between(a, b);
      Bound bm = Bound::at(mid);
      if (p.eval(mid) == 0) {
        out.push_back(refine_root(p, around_exact(p, mid, a, b, kBits), kBits));
        return;
      }
      if (count_with(seq, a, bm) == 1) {
        b = bm;
      } else {
        a = bm;
      }
    }
    out.push_back(refine_root(p, {a.value.a(), b.value.a()}, kBits));
  };

  std::function<void(const Bound&, const Bound&, int)> split = [&](const Bound& a, const Bound& b, int k) {
    if (k <= 0) return;
    if (k == 1) {
      finish(a, b);
      return;
    }
    Rational mid = rational_between(a, b);
    for (unsigned j = 3; p.eval(mid) == 0; ++j) {
      Rational shifted = mid + (b.value.approx(64) - a.value.approx(64)) * two_pow_neg(j);
      if (compare(a, Bound::at(shifted)) < 0 && compare(Bound::at(shifted), b) < 0) mid = shifted;
    }
    Bound bm = Bound::at(mid);
    int left = count_with(seq, a, bm);
    split(a, bm, left);
    split(bm, b, k - left);
  };
  split(lo, hi, count_with(seq, lo, hi));
  return out;
}

std::vector<QuadraticRoot> solve_quadratic_exact(const Poly& p) {
  if (p.is_zero()) throw AlgebraError("zero polynomial has no finite root set");
  if (p.degree() > 2) throw AlgebraError("degree > 2: use isolation");
  if (p.degree() == 0) return {};
  if (p.degree() == 1) return {{QuadraticSurd(-p.coeff(0) / p.coeff(1)), 1}};
  Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  Rational disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  Rational center = -b / (2 * a);
  if (disc == 0) return {{QuadraticSurd(center), 2}};
  QuadraticSurd s = QuadraticSurd::sqrt_of(disc) / (2 * a);
  QuadraticSurd r1 = QuadraticSurd(center) - s, r2 = QuadraticSurd(center) + s;
  if (r2 < r1) std::swap(r1, r2);
  return {{r1, 1}, {r2, 1}};
}

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw AlgebraError("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace biharm
