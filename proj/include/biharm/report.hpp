#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "biharm/classifier.hpp"

namespace biharm {

struct RootDescription {
  std::optional<std::string> closed_form;
  double c = 0;
  double psi_over_pi = 0;

  bool operator==(const RootDescription&) const = default;
};

/// One table line: a (family, edge) classification in display form.
struct ReportRow {
  std::string groups;
  std::string type;
  std::string kind;
  std::string action;
  std::string params;
  std::string multiplicities;
  std::string edge;
  std::string psi_domain;
  std::string category;
  std::optional<long> codim;
  /// Membership in list 1 (proper biharmonic orbits exist) or list 2, rank 1 only.
  std::optional<int> list;
  std::vector<RootDescription> proper_roots;
  std::vector<RootDescription> harmonic_roots;
  std::string source;
  std::string note;

  bool operator==(const ReportRow&) const = default;
};

enum class ReportFormat { Json, Markdown };

/// Rounds to 12 significant digits.
double round12(double x);
ReportRow make_row(const ClassificationResult& r);
std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format, const std::string& title = "");
std::vector<ReportRow> parse_report_json(const std::string& text);

/// Exit codes: 0 ok, 1 usage, 2 verification mismatch, 3 data error.
int run_cli(int argc, char** argv);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace biharm
