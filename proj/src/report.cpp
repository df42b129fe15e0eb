#include "biharm/report.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "biharm/oracle.hpp"
#include "json.hpp"

namespace biharm {

namespace {

using nlohmann::json;

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string params_string(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s;
}

RootDescription describe(const RootInfo& r) {
  RootDescription d;
  if (r.closed_form) d.closed_form = r.closed_form->to_string();
  d.c = round12(r.c);
  d.psi_over_pi = round12(r.psi_over_pi);
  return d;
}

json root_json(const RootDescription& d) {
  json j;
  j["closed_form"] = d.closed_form ? json(*d.closed_form) : json(nullptr);
  j["c"] = d.c;
  j["psi_over_pi"] = d.psi_over_pi;
  return j;
}

RootDescription root_from_json(const json& j) {
  RootDescription d;
  if (!j.at("closed_form").is_null()) d.closed_form = j.at("closed_form").get<std::string>();
  d.c = j.at("c").get<double>();
  d.psi_over_pi = j.at("psi_over_pi").get<double>();
  return d;
}

json row_json(const ReportRow& r) {
  json j;
  j["groups"] = r.groups;
  j["type"] = r.type;
  j["kind"] = r.kind;
  j["action"] = r.action;
  j["params"] = r.params;
  j["multiplicities"] = r.multiplicities;
  j["edge"] = r.edge;
  j["psi_domain"] = r.psi_domain;
  j["category"] = r.category;
  j["codim"] = r.codim ? json(*r.codim) : json(nullptr);
  j["list"] = r.list ? json(*r.list) : json(nullptr);
  j["proper_roots"] = json::array();
  for (const auto& d : r.proper_roots) j["proper_roots"].push_back(root_json(d));
  j["harmonic_roots"] = json::array();
  for (const auto& d : r.harmonic_roots) j["harmonic_roots"].push_back(root_json(d));
  j["source"] = r.source;
  j["note"] = r.note;
  return j;
}

ReportRow row_from_json(const json& j) {
  ReportRow r;
  r.groups = j.at("groups").get<std::string>();
  r.type = j.at("type").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.action = j.at("action").get<std::string>();
  r.params = j.at("params").get<std::string>();
  r.multiplicities = j.at("multiplicities").get<std::string>();
  r.edge = j.at("edge").get<std::string>();
  r.psi_domain = j.at("psi_domain").get<std::string>();
  r.category = j.at("category").get<std::string>();
  if (!j.at("codim").is_null()) r.codim = j.at("codim").get<long>();
  if (!j.at("list").is_null()) r.list = j.at("list").get<int>();
  for (const auto& d : j.at("proper_roots")) r.proper_roots.push_back(root_from_json(d));
  for (const auto& d : j.at("harmonic_roots")) r.harmonic_roots.push_back(root_from_json(d));
  r.source = j.at("source").get<std::string>();
  r.note = j.at("note").get<std::string>();
  return r;
}

std::string roots_cell(const std::vector<RootDescription>& roots) {
  if (roots.empty()) return "none";
  std::string s;
  for (const auto& d : roots) {
    if (!s.empty()) s += "; ";
    s += "psi/pi=" + decimal(d.psi_over_pi);
    if (d.closed_form) s += " [" + *d.closed_form + "]";
  }
  return s;
}

std::string markdown(const std::vector<ReportRow>& rows, const std::string& title) {
  bool with_list = std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.list.has_value(); });
  std::ostringstream os;
  if (!title.empty()) os << "## " << title << "\n\n";
  os << "| Triad | Type | Multiplicities | Params | Edge | Category | codim |";
  if (with_list) os << " List |";
  os << " Proper biharmonic orbits |\n";
  os << "|---|---|---|---|---|---|---|";
  if (with_list) os << "---|";
  os << "---|\n";
  std::string last;
  for (const auto& r : rows) {
    std::string key = r.groups + "|" + r.params;
    bool first = key != last;
    last = key;
    os << "| " << (first ? r.groups : "") << " | " << (first ? r.type : "") << " | "
       << (first ? r.multiplicities : "") << " | " << (first ? (r.params.empty() ? "-" : r.params) : "") << " | "
       << r.edge << " | " << r.category << " | " << (r.codim ? std::to_string(*r.codim) : "-") << " |";
    if (with_list) os << " " << (r.list ? std::to_string(*r.list) : "-") << " |";
    os << " " << roots_cell(r.proper_roots) << " |\n";
  }
  return os.str();
}

struct Suite {
  std::string name;
  std::string title;
  SuiteSelection selection;
  ActionKind action;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> s = {
      {"isotropy2", "Rank two, isotropy actions", {2, TriadKind::Isotropy}, ActionKind::Hermann},
      {"hermann2", "Rank two, Hermann actions", {2, TriadKind::Hermann}, ActionKind::Hermann},
      {"rank1-group", "Rank one, (K2 x K1)-actions on G", {1, std::nullopt}, ActionKind::Group},
  };
  return s;
}

std::vector<ReportRow> run_suite(const Catalog& catalog, const Suite& s) {
  std::vector<ReportRow> rows;
  for (const auto& r : classify_all(catalog, s.action, s.selection)) rows.push_back(make_row(r));
  return rows;
}

Params parse_params(const std::string& text) {
  Params p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--params", "expected k=v, got \"" + item + "\"");
    try {
      p[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--params", "non-integer value in \"" + item + "\"");
    }
  }
  return p;
}

struct Outputs {
  std::ostream& out;
  std::ostream& err;
};

int cmd_classify(const Catalog& catalog, const std::string& triad_name, const std::string& params_text,
                 const std::string& edge, const std::string& action_text, ReportFormat fmt, Outputs io) {
  const CatalogEntry& entry = catalog.entry(triad_name);
  Params params = parse_params(params_text);
  ActionKind action = entry.rank == 1 ? ActionKind::Group : ActionKind::Hermann;
  if (action_text == "hermann") action = ActionKind::Hermann;
  if (action_text == "group") action = ActionKind::Group;
  std::vector<ClassificationResult> results;
  if (edge.empty()) {
    results = classify_entry(entry, params, action);
  } else {
    Params full = params;
    for (const auto& [k, v] : entry.default_params())
      if (!full.count(k)) full[k] = v;
    SymmetricTriad t = entry.instantiate(full);
    results.push_back(classify_family(entry, full, find_edge(t, edge), action));
  }
  std::vector<ReportRow> rows;
  for (const auto& r : results) rows.push_back(make_row(r));
  io.out << emit_report(rows, fmt);
  return 0;
}

int cmd_report(const Catalog& catalog, const std::string& suite, ReportFormat fmt, Outputs io) {
  std::vector<ReportRow> all;
  std::string md;
  for (const auto& s : suites()) {
    if (suite != "all" && suite != s.name) continue;
    auto rows = run_suite(catalog, s);
    if (fmt == ReportFormat::Markdown) md += (md.empty() ? "" : "\n") + emit_report(rows, fmt, s.title);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  io.out << (fmt == ReportFormat::Markdown ? md : emit_report(all, fmt));
  return 0;
}

int cmd_verify(const Catalog& catalog, int grid, Outputs io) {
  NumericProfile profile;
  profile.grid_n = grid;
  int failures = 0, checked = 0;
  double worst = 0;
  for (const auto& s : suites()) {
    for (const auto& r : classify_all(catalog, s.action, s.selection)) {
      const CatalogEntry& e = catalog.entry(r.family);
      SymmetricTriad t = e.instantiate(r.params);
      CrossCheckReport rep = cross_check(r, t, profile);
      ++checked;
      worst = std::max(worst, rep.max_delta);
      if (!rep.match) {
        ++failures;
        io.err << "mismatch: " << r.family << " [" << r.edge_label << ", " << to_string(r.action)
               << "]: " << rep.diagnostics << "\n";
      }
    }
  }
  io.out << "checked " << checked << " families, " << failures << " mismatches, max |dpsi| = " << worst << "\n";
  return failures ? 2 : 0;
}

int cmd_catalog(const Catalog& catalog, const std::string& action, const std::string& name,
                const std::string& params_text, Outputs io) {
  if (action == "list") {
    for (const auto* e : catalog.enumerate_families())
      io.out << e->type << "\t" << to_string(e->kind()) << "\trank " << e->rank << "\t" << e->name << "\t"
             << e->multiplicity_label() << "\n";
    return 0;
  }
  if (action == "validate") {
    int bad = 0;
    for (const auto& e : catalog.entries()) {
      std::vector<std::string> issues;
      try {
        issues = validate(e.instantiate(e.default_params()));
      } catch (const std::exception& ex) {
        issues.push_back(ex.what());
      }
      for (const auto& i : issues) io.err << e.name << ": " << i << "\n";
      if (!issues.empty()) ++bad;
    }
    io.out << catalog.entries().size() << " entries, " << bad << " invalid\n";
    return bad ? 3 : 0;
  }
  if (action == "show") {
    if (name.empty()) throw CLI::ValidationError("show", "a triad name is required");
    const CatalogEntry& e = catalog.entry(name);
    Params params = parse_params(params_text);
    for (const auto& [k, v] : e.default_params())
      if (!params.count(k)) params[k] = v;
    SymmetricTriad t = e.instantiate(params);
    Cell cell = build_cell(t);
    io.out << "name: " << e.name << "\ntype: " << e.type << " (" << to_string(e.kind()) << ", rank " << e.rank
           << ")\nmultiplicities: " << e.multiplicity_label() << "\nparams: " << params_string(params)
           << "\nsource: " << e.source << "\ncell: " << cell.to_string() << "\n";
    for (const auto& c : e.constraints) io.out << "constraint: " << c.text << "\n";
    for (size_t i = 0; i < t.sigma_plus.size(); ++i)
      io.out << "sigma " << root_to_string(t.sigma_plus[i]) << " m=" << t.m[i] << "\n";
    for (size_t i = 0; i < t.w_plus.size(); ++i)
      io.out << "w     " << root_to_string(t.w_plus[i]) << " n=" << t.n[i] << "\n";
    for (const auto& st : edges(t)) {
      EdgeParam ep = parametrize_edge(t, st);
      io.out << "edge " << st.edge_index << " {" << st.label() << "}: psi in " << ep.psi_domain_string()
             << ", c in " << ep.c_domain.to_string() << "\n";
      for (size_t i = 0; i < t.sigma_plus.size(); ++i)
        io.out << "  <" << root_to_string(t.sigma_plus[i]) << ",H> = " << ep.sigma_angles[i].to_string()
               << (ep.sigma_singular[i] ? "  (singular)" : "") << "\n";
      for (size_t i = 0; i < t.w_plus.size(); ++i)
        io.out << "  <" << root_to_string(t.w_plus[i]) << ",H> = " << ep.w_angles[i].to_string() << " [W]"
               << (ep.w_singular[i] ? "  (singular)" : "") << "\n";
    }
    auto issues = validate(t);
    io.out << "validation: " << (issues.empty() ? "ok" : std::to_string(issues.size()) + " violations") << "\n";
    return 0;
  }
  throw CLI::ValidationError("catalog", "unknown action " + action);
}

int cmd_thresholds(const Catalog& catalog, const std::string& triad_name, const std::string& param, long lo, long hi,
                   const std::string& params_text, const std::string& action_text, Outputs io) {
  const CatalogEntry& entry = catalog.entry(triad_name);
  ActionKind action = entry.rank == 1 ? ActionKind::Group : ActionKind::Hermann;
  if (action_text == "hermann") action = ActionKind::Hermann;
  if (action_text == "group") action = ActionKind::Group;
  ThresholdReport rep = threshold_scan(entry, param, lo, hi, action, parse_params(params_text));
  io.out << "family: " << rep.family << "\nparameter: " << rep.param << " in [" << lo << "," << hi << "]\n";
  if (rep.discriminant) io.out << "discriminant: " << rep.discriminant->to_string(rep.param) << "\n";
  for (const auto& t : rep.threshold_forms) io.out << "threshold: " << rep.param << " = " << t << "\n";
  for (long q : rep.degenerate_points) io.out << "degenerate: " << rep.param << " = " << q << "\n";
  for (const auto& g : rep.regimes)
    io.out << "regime: " << g.lo << ".." << g.hi << " -> " << to_string(g.category) << "\n";
  io.out << "consistent: " << (rep.consistent ? "yes" : "no") << "\n";
  if (!rep.note.empty()) io.out << "note: " << rep.note << "\n";
  return rep.consistent ? 0 : 2;
}

}  // namespace

double round12(double x) { return std::stod(decimal(x)); }

ReportRow make_row(const ClassificationResult& r) {
  ReportRow row;
  row.groups = r.family;
  row.type = r.type;
  row.kind = to_string(r.kind);
  row.action = to_string(r.action);
  row.params = params_string(r.params);
  row.multiplicities = r.multiplicities;
  row.edge = r.edge_label;
  row.psi_domain = r.psi_domain;
  row.category = to_string(r.category);
  row.codim = r.codim;
  if (r.rank == 1) row.list = (!r.proper_roots.empty() || (r.all_biharmonic && !r.all_harmonic)) ? 1 : 2;
  for (const auto& p : r.proper_roots) row.proper_roots.push_back(describe(p));
  for (const auto& p : r.harmonic_roots) row.harmonic_roots.push_back(describe(p));
  row.source = r.source;
  row.note = r.note;
  return row;
}

std::string emit_report(const std::vector<ReportRow>& rows, ReportFormat format, const std::string& title) {
  if (format == ReportFormat::Markdown) return markdown(rows, title);
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  return arr.dump(2) + "\n";
}

std::vector<ReportRow> parse_report_json(const std::string& text) {
  std::vector<ReportRow> rows;
  for (const auto& j : json::parse(text)) rows.push_back(row_from_json(j));
  return rows;
}

int run_cli(int argc, char** argv) { return run_cli(argc, argv, std::cout, std::cerr); }

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biharmonic orbit classification from symmetric-triad root data"};
  app.require_subcommand(1);
  Outputs io{out, err};

  std::string format_text = "md";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json or md")->check(CLI::IsMember({"json", "md"}));
  };

  std::string triad, params_text, edge, action_text = "auto";
  auto* classify = app.add_subcommand("classify", "classify the edges of one family");
  classify->add_option("--triad", triad, "catalog name")->required();
  classify->add_option("--params", params_text, "k=v,...");
  classify->add_option("--edge", edge, "edge label such as a1,delta or 1..3");
  classify->add_option("--action", action_text, "hermann or group")->check(CLI::IsMember({"auto", "hermann", "group"}));
  add_format(classify);

  std::string suite = "all";
  auto* report = app.add_subcommand("report", "reproduce a suite of tables");
  report->add_option("--suite", suite)->check(CLI::IsMember({"isotropy2", "hermann2", "rank1-group", "all"}));
  add_format(report);

  int grid = NumericProfile{}.grid_n;
  auto* verify = app.add_subcommand("verify", "cross-check every family against the numeric oracle");
  verify->add_option("--grid", grid, "oracle grid size")->check(CLI::Range(100, 10000000));

  std::string cat_action, cat_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "inspect the triad catalog");
  catalog_cmd->add_option("action", cat_action, "list, validate or show")
      ->required()
      ->check(CLI::IsMember({"list", "validate", "show"}));
  catalog_cmd->add_option("name", cat_name, "triad name for show");
  catalog_cmd->add_option("--params", params_text, "k=v,...");

  std::string param;
  long lo = 2, hi = 100;
  auto* thresholds = app.add_subcommand("thresholds", "scan an integer parameter for regime changes");
  thresholds->add_option("--triad", triad)->required();
  thresholds->add_option("--param", param)->required();
  thresholds->add_option("--from", lo);
  thresholds->add_option("--to", hi);
  thresholds->add_option("--params", params_text, "other parameters k=v,...");
  thresholds->add_option("--action", action_text)->check(CLI::IsMember({"auto", "hermann", "group"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
  ReportFormat fmt = format_text == "json" ? ReportFormat::Json : ReportFormat::Markdown;

  try {
    Catalog catalog = Catalog::from_env_or_builtin();
    if (*classify) return cmd_classify(catalog, triad, params_text, edge, action_text, fmt, io);
    if (*report) return cmd_report(catalog, suite, fmt, io);
    if (*verify) return cmd_verify(catalog, grid, io);
    if (*catalog_cmd) return cmd_catalog(catalog, cat_action, cat_name, params_text, io);
    if (*thresholds) return cmd_thresholds(catalog, triad, param, lo, hi, params_text, action_text, io);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const CatalogError& e) {
    err << "catalog error: " << e.what() << "\n";
    return 3;
  } catch (const StrataError& e) {
    err << "strata error: " << e.what() << "\n";
    return 3;
  } catch (const AlgebraError& e) {
    err << "algebra error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace biharm
