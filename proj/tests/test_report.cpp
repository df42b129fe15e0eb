#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "biharm/report.hpp"

using namespace biharm;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "biharm");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("round12") {
  CHECK(round12(0.1 + 0.2) == 0.3);
  CHECK(round12(0.0) == 0.0);
  CHECK(round12(-1234.56789012345678) == -1234.56789012);
}

TEST_CASE("json round trip") {
  Catalog c = Catalog::builtin();
  std::vector<ReportRow> rows;
  SuiteSelection sel{2, TriadKind::Hermann};
  for (const auto& r : classify_all(c, ActionKind::Hermann, sel)) rows.push_back(make_row(r));
  SuiteSelection rank1{1, TriadKind::Hermann};
  for (const auto& r : classify_all(c, ActionKind::Group, rank1)) rows.push_back(make_row(r));
  REQUIRE_FALSE(rows.empty());
  CHECK(parse_report_json(emit_report(rows, ReportFormat::Json)) == rows);
  CHECK_THROWS(parse_report_json("not json"));
}

TEST_CASE("markdown report") {
  Catalog c = Catalog::builtin();
  std::vector<ReportRow> rows;
  SuiteSelection sel{2, TriadKind::Isotropy};
  for (const auto& r : classify_all(c, ActionKind::Hermann, sel)) rows.push_back(make_row(r));
  std::string md = emit_report(rows, ReportFormat::Markdown, "Isotropy");
  CHECK(md.find("| SU(3),SO(3) | A2 |") != std::string::npos);
  CHECK(md.find("cot(psi) = 1") != std::string::npos);
}

TEST_CASE("classify command") {
  CliRun r = run({"classify", "--triad", "SU(3),SO(3)", "--edge", "a1,delta", "--format", "json"});
  REQUIRE(r.code == 0);
  auto rows = parse_report_json(r.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].category == "ii");
  CHECK(rows[0].codim == 3);
  REQUIRE(rows[0].proper_roots.size() == 2);
  CHECK(rows[0].proper_roots[0].psi_over_pi == 0.25);
  CHECK(rows[0].proper_roots[1].psi_over_pi == 0.75);
  REQUIRE(rows[0].harmonic_roots.size() == 1);
  CHECK(rows[0].harmonic_roots[0].psi_over_pi == 0.5);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({"classify", "--triad", "SU(3),SO(3)", "--format", "xml"}).code == 1);
  CHECK(run({"classify", "--triad", "SU(3),SO(3)", "--params", "q"}).code == 1);
  CHECK(run({"--help"}).code == 0);

  CliRun missing = run({"classify", "--triad", "nothing"});
  CHECK(missing.code == 3);
  CHECK(missing.err.find("catalog error") != std::string::npos);
  CHECK(run({"classify", "--triad", "SU(3),SO(3)", "--edge", "a1,atilde"}).code == 3);
  CHECK(run({"classify", "--triad", "SO(2+a+b),SO(2+a)xSO(b),SO(2)xSO(a+b)", "--params", "a=1,b=2"}).code == 3);
  CHECK(run({"thresholds", "--triad", "SU(1+q),SO(1+q),S(U(1)xU(q))", "--param", "q", "--from", "9", "--to", "3"})
            .code == 3);
}

TEST_CASE("catalog and thresholds commands") {
  CliRun list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("G2,SO(4)") != std::string::npos);
  CHECK(run({"catalog", "validate"}).code == 0);
  CliRun show = run({"catalog", "show", "SU(3),SO(3)"});
  CHECK(show.code == 0);

  CliRun scan = run({"thresholds", "--triad", "SU(1+q),SO(1+q),S(U(1)xU(q))", "--param", "q"});
  CHECK(scan.code == 0);
  CHECK(scan.out.find("53") != std::string::npos);
}

TEST_CASE("verify on a small catalog") {
  std::string path = "report_verify_catalog.json";
  std::ofstream(path) << R"([{"name": "X", "type": "B1", "rank": 1, "gram": [[1]], "sigma_plus": [[1]],
                              "m": {"0": "q-1"}, "constraints": ["1<q"]}])";
  setenv("TRIAD_CATALOG_PATH", path.c_str(), 1);
  CliRun r = run({"verify", "--grid", "2000"});
  unsetenv("TRIAD_CATALOG_PATH");
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out.find("0 mismatches") != std::string::npos);
}
