#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "biharm/exact.hpp"

namespace biharm {

/// Malformed catalog data, unknown names, or violated parameter constraints.
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Params = std::map<std::string, long>;
using RootVector = std::vector<Rational>;

/// constant + sum(coeff * param); products of parameters are rejected at parse time.
class AffineExpr {
 public:
  AffineExpr() = default;
  explicit AffineExpr(const Rational& c) : constant_(c) {}
  static AffineExpr parse(const std::string& text);
  static AffineExpr parse_variable(const std::string& name);

  Rational eval(const Params& params) const;
  bool is_constant() const { return coeffs_.empty(); }
  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
  std::set<std::string> params() const;
  std::string to_string() const;

  AffineExpr operator+(const AffineExpr& o) const;
  AffineExpr operator-(const AffineExpr& o) const;
  AffineExpr scaled(const Rational& s) const;

 private:
  Rational constant_{0};
  std::map<std::string, Rational> coeffs_;
};

/// Integer inequality between two affine expressions, e.g. "2<b".
struct Constraint {
  enum class Op { Lt, Le, Gt, Ge, Eq, Ne };
  AffineExpr lhs;
  Op op = Op::Lt;
  AffineExpr rhs;
  std::string text;

  static Constraint parse(const std::string& text);
  bool holds(const Params& params) const;
};

enum class TriadKind { Isotropy, Hermann };

std::string to_string(TriadKind k);

/// Fully instantiated root data: positive roots of Sigma and W with integer multiplicities.
struct SymmetricTriad {
  std::string name;
  std::string type;
  int rank = 0;
  TriadKind kind = TriadKind::Isotropy;
  std::vector<std::vector<Rational>> gram;
  std::vector<RootVector> sigma_plus;
  std::vector<RootVector> w_plus;
  std::vector<long> m;
  std::vector<long> n;
  Params params;

  Rational inner(const RootVector& x, const RootVector& y) const;
  /// Sigma+ followed by W+ without repetitions.
  std::vector<RootVector> tilde_plus() const;
};

/// One table row: parametric root data plus display metadata.
struct CatalogEntry {
  std::string name;
  std::string type;
  int rank = 0;
  std::vector<std::vector<Rational>> gram;
  std::vector<RootVector> sigma_plus;
  std::vector<RootVector> w_plus;
  std::vector<AffineExpr> m;
  std::vector<AffineExpr> n;
  std::vector<Constraint> constraints;
  std::vector<AffineExpr> codim;
  std::string source;
  /// Table-style tuple such as "(b-2,1,a)"; derived from m and n when empty.
  std::string display_multiplicities;

  TriadKind kind() const { return w_plus.empty() ? TriadKind::Isotropy : TriadKind::Hermann; }
  std::vector<std::string> param_names() const;
  /// Smallest integers satisfying the constraints.
  Params default_params() const;
  /// Throws CatalogError naming the first violated constraint.
  SymmetricTriad instantiate(const Params& params) const;
  /// Display string of the multiplicity tuple, e.g. "(b-2,1,a)".
  std::string multiplicity_label() const;
};

struct FamilyFilter {
  std::optional<int> rank;
  std::optional<TriadKind> kind;
  std::optional<std::string> type;
};

class Catalog {
 public:
  static Catalog builtin();
  static Catalog from_json(const std::string& text);
  static Catalog from_file(const std::string& path);
  /// TRIAD_CATALOG_PATH when set, else the embedded catalog.
  static Catalog from_env_or_builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  /// Exact (whitespace-insensitive) name match, else a unique prefix.
  const CatalogEntry& entry(const std::string& name) const;
  SymmetricTriad lookup(const std::string& name, const Params& params) const;
  /// Deterministic order: by type label, then name.
  std::vector<const CatalogEntry*> enumerate_families(const FamilyFilter& filter = {}) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Empty when the triad satisfies every structural invariant.
std::vector<std::string> validate(const SymmetricTriad& triad);

// Root-data helpers shared by the strata and criterion layers.

/// Fundamental system of Sigma-tilde, ordered by first appearance in tilde_plus().
std::vector<RootVector> simple_roots(const SymmetricTriad& triad);
/// Coefficients of a root in the simple-root basis.
std::vector<Rational> simple_coordinates(const SymmetricTriad& triad, const std::vector<RootVector>& simple,
                                         const RootVector& root);
/// delta (isotropy) or alpha-tilde (hermann); throws when not unique.
RootVector top_root(const SymmetricTriad& triad);
std::string root_to_string(const RootVector& r);

}  // namespace biharm
