#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace biharm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised by the exact layer on contract violations (zero gcd, non-squarefree input, ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q"; the result is canonical.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// Univariate polynomial over Q, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> ascending);
  Poly(std::initializer_list<long> ascending);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly var();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  Poly derivative() const;
  Poly monic() const;
  /// Scales to coprime integer coefficients with positive leading coefficient.
  Poly primitive() const;
  Poly pow(unsigned e) const;
  /// p(q(x)).
  Poly compose(const Poly& q) const;
  /// True when only even (resp. odd) powers occur.
  bool is_even() const;
  bool is_odd() const;
  /// q(u) with p(x) = q(x^2); requires is_even().
  Poly even_part_in_square() const;

  std::string to_string(const std::string& var = "c") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& p);
/// Monic gcd; throws "undefined gcd" when both inputs vanish.
Poly poly_gcd(const Poly& p, const Poly& q);
/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);

/// Reduced quotient num/den with monic denominator.
class RationalFn {
 public:
  RationalFn() : num_(), den_(Poly::constant(1)) {}
  RationalFn(Poly num);  // NOLINT
  RationalFn(Poly num, Poly den);
  static RationalFn constant(const Rational& c) { return RationalFn(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const Rational& s, const RationalFn& a);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  RationalFn reciprocal() const;
  std::string to_string(const std::string& var = "c") const;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

/// a + b*sqrt(d) with d square-free and non-negative; d == 0 forces b == 0.
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0), d_(0) {}
  QuadraticSurd(const Rational& a);  // NOLINT
  QuadraticSurd(const Rational& a, const Rational& b, const Integer& d);
  /// sqrt(r) for a non-negative rational r.
  static QuadraticSurd sqrt_of(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  QuadraticSurd operator-() const;
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator/(const QuadraticSurd& x, const Rational& y);
  bool operator==(const QuadraticSurd& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
  bool operator!=(const QuadraticSurd& o) const { return !(*this == o); }
  /// Exact three-way comparison; the two radicands may differ.
  friend int compare(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y) < 0; }
  friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y) > 0; }

  QuadraticSurd eval(const Poly& p) const;
  double to_double() const;
  /// Rational r with |r - value| < 2^-bits.
  Rational approx(unsigned bits) const;
  /// "(A+B*sqrt(d))/D" with integers, or a plain rational.
  std::string to_string() const;

 private:
  void normalize();
  Rational a_;
  Rational b_;
  Integer d_;
};

/// Interval endpoint: -inf, +inf, or an exact finite value (possibly a surd).
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  QuadraticSurd value;

  static Bound neg_inf() { return {Kind::NegInf, {}}; }
  static Bound pos_inf() { return {Kind::PosInf, {}}; }
  static Bound at(const QuadraticSurd& v) { return {Kind::Finite, v}; }
  bool finite() const { return kind == Kind::Finite; }
  double to_double() const;
  std::string to_string() const;
};

int compare(const Bound& x, const Bound& y);

/// Open interval (lo, hi) with lo < hi.
struct Interval {
  Bound lo;
  Bound hi;
  Interval() : lo(Bound::neg_inf()), hi(Bound::pos_inf()) {}
  Interval(Bound l, Bound h);
  static Interval real_line() { return {}; }
  bool contains(const QuadraticSurd& x) const;
  std::string to_string() const;
};

/// Isolating interval with rational endpoints; exactly one root inside.
struct RootInterval {
  Rational lo;
  Rational hi;
  double midpoint() const { return (to_double(lo) + to_double(hi)) / 2; }
};

/// Sign of p at an exact bound (limits at infinity).
int sign_at(const Poly& p, const Bound& x);
std::vector<Poly> sturm_sequence(const Poly& p);
/// Number of distinct roots strictly inside iv; p must be squarefree.
int sturm_count(const Poly& p, const Interval& iv);
/// Disjoint ascending isolating intervals of width <= 2^-40, one per root in iv.
std::vector<RootInterval> isolate_real_roots(const Poly& p, const Interval& iv);
/// Shrinks an isolating interval of a squarefree p to width <= 2^-bits.
RootInterval refine_root(const Poly& p, RootInterval r, unsigned bits);

struct QuadraticRoot {
  QuadraticSurd value;
  int multiplicity = 1;
};

/// Exact roots of a polynomial of degree <= 2, ascending; throws "use isolation" above.
std::vector<QuadraticRoot> solve_quadratic_exact(const Poly& p);

/// Solves the square system A x = b over Q; throws if singular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace biharm
