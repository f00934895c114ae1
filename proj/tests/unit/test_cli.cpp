#include <algorithm>

#include "doctest.h"
#include "ttw4d/report.hpp"
#include "ttw4d/suites.hpp"

using namespace ttw4d;

namespace {

SuiteConfig config(SuiteId id, const char* k) {
  SuiteConfig c;
  c.suite = id;
  c.params = SystemParams::parse(k, "1/2,1/2,1/2,1/2", "1");
  c.nmax = 1;
  c.points = 3;
  return c;
}

std::string without_wall(std::string json) {
  const auto at = json.find("\"wall_ms\"");
  return at == std::string::npos ? json : json.substr(0, at);
}

}  // namespace

TEST_CASE("empty report") {
  SuiteReport r;
  r.suite = "eigen";
  r.k = "1,1,1";
  r.a = "1/2,1/2,1/2,1/2";
  r.omega = "1";
  r.finalize();
  CHECK(r.pass);
  CHECK(r.max_residual == 0);
  const SuiteReport back = parse_report_json(emit_report(r, ReportFormat::json));
  CHECK(back.pass);
  CHECK(back.cases.empty());
  CHECK(emit_report(r, ReportFormat::csv).find('\n') == emit_report(r, ReportFormat::csv).size() - 1);
}

TEST_CASE("json and csv round trip") {
  const SuiteReport r = run_suite(config(SuiteId::curvature, "2,1,1"));
  REQUIRE_FALSE(r.cases.empty());
  const SuiteReport back = parse_report_json(emit_report(r, ReportFormat::json));
  REQUIRE(back.cases.size() == r.cases.size());
  for (std::size_t j = 0; j < r.cases.size(); ++j) {
    CHECK(back.cases[j].pass == r.cases[j].pass);
    CHECK(back.cases[j].residual == r.cases[j].residual);
    CHECK(back.cases[j].point == r.cases[j].point);
  }
  CHECK(back.k == "2,1,1");
  const std::string csv = emit_report(r, ReportFormat::csv);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.cases.size() + 1);
  const auto rows = parse_report_csv(csv);
  REQUIRE(rows.size() == r.cases.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    CHECK(rows[j].residual == r.cases[j].residual);
    CHECK(rows[j].state == r.cases[j].state);
  }
}

TEST_CASE("reports are deterministic") {
  auto c = config(SuiteId::conformal, "2,1,2");
  c.threads = 3;
  const std::string a = emit_report(run_suite(c), ReportFormat::json);
  c.threads = 1;
  const std::string b = emit_report(run_suite(c), ReportFormat::json);
  CHECK(without_wall(a) == without_wall(b));
  c.seed += 1;
  CHECK(without_wall(a) != without_wall(emit_report(run_suite(c), ReportFormat::json)));
}

TEST_CASE("suite guards") {
  CHECK_THROWS_AS(run_suite(config(SuiteId::example211, "3,1,1")), UnsupportedSuite);
  CHECK_THROWS_AS(run_suite(config(SuiteId::m1, "1,1,1")), UnsupportedSuite);
  auto c = config(SuiteId::eigen, "1,1,1");
  c.nmax = 9;
  CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
  CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  CHECK(run_all(config(SuiteId::all, "1,1,1")).size() == 6);
}

TEST_CASE("eigen suite passes on the flat case") {
  const SuiteReport r = run_suite(config(SuiteId::eigen, "1,1,1"));
  CHECK(r.pass);
  CHECK(r.max_residual <= 1e-7);
  CHECK(r.cases.size() == 16 * 4);
}

TEST_CASE("spectrum table") {
  const auto flat = SystemParams::parse("1,1,1", "1/2,1/2,1/2,1/2");
  CHECK(spectrum_table(flat, 0).size() == 1);
  CHECK(spectrum_table(flat, 0).front().E == OmegaPoly::omega() * Rational(-12));
  const auto rows = spectrum_table(SystemParams::parse("2,1,1", "1/2,1/2,1/2,1/2"), 2);
  std::size_t c1 = 0, c2 = 1;
  for (const auto& r : rows) {
    if (r.state == QuantumState{{2, 0, 0, 0}}) c1 = r.class_index;
    if (r.state == QuantumState{{0, 1, 0, 0}}) c2 = r.class_index;
  }
  CHECK(c1 == c2);
  CHECK(format_spectrum(rows).find("-15*w") != std::string::npos);
}
