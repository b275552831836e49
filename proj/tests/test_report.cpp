#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "indvar/report.hpp"
#include "test_support.hpp"

using namespace ts;
using indvar::emit_report;
using indvar::Report;
using indvar::ReportFormat;
using indvar::report_from_json;
using indvar::run_checks;
using indvar::RunOverrides;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report run_catalog(const std::string& name, RunOverrides overrides = {}) {
  auto spec = indvar::dsl::parse_spec(slurp(catalog_dir() + "/" + name));
  auto bound = indvar::dsl::bind_spec(spec);
  return run_checks(bound, overrides, name);
}

std::string strip_timing(std::string json) {
  return std::regex_replace(json, std::regex("\"ms\": [0-9]+"), "\"ms\": 0");
}

}  // namespace

TEST_CASE("catalog files pass at default parameters") {
  for (const char* name :
       {"top_exa.ind", "irred1.ind", "irred2.ind", "lines.ind", "noether_demo.ind"}) {
    Report r = run_catalog(name);
    CHECK_MESSAGE(r.exit_code() == 0, name);
  }
}

TEST_CASE("top_exa at depth 6 / bound 8 reproduces the expected verdicts") {
  Report r = run_catalog("top_exa.ind");
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].cert.verdict == Verdict::CertifiedTrue);
  CHECK(r.checks[1].cert.verdict == Verdict::CertifiedTrue);
}

TEST_CASE("irred2 with a depth override still fails directedness and stays irreducible") {
  RunOverrides ov;
  ov.depth = 6;
  Report r = run_catalog("irred2.ind", ov);
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[1].cert.verdict == Verdict::FailsUpToDepth);
  CHECK(r.checks[2].cert.verdict == Verdict::CertifiedTrue);
}

TEST_CASE("empty spec gives an empty passing report") {
  auto bound = indvar::dsl::bind_spec(indvar::dsl::parse_spec(""));
  Report r = run_checks(bound, {}, "empty");
  CHECK(r.checks.empty());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("structured reports round-trip") {
  Report r = run_catalog("top_exa.ind");
  std::string once = emit_report(r, ReportFormat::Structured);
  Report parsed = report_from_json(once);
  std::string twice = emit_report(parsed, ReportFormat::Structured);
  CHECK(twice == once);
}

TEST_CASE("verdicts serialize as exactly the five strings") {
  CHECK(to_string(Verdict::CertifiedTrue) == "CERTIFIED_TRUE");
  CHECK(to_string(Verdict::CertifiedFalse) == "CERTIFIED_FALSE");
  CHECK(to_string(Verdict::FailsUpToDepth) == "FAILS_UP_TO_DEPTH");
  CHECK(to_string(Verdict::Conditional) == "CONDITIONAL");
  CHECK(to_string(Verdict::Inconclusive) == "INCONCLUSIVE");
  for (const char* s : {"CERTIFIED_TRUE", "CERTIFIED_FALSE", "FAILS_UP_TO_DEPTH",
                        "CONDITIONAL", "INCONCLUSIVE"})
    CHECK(verdict_from_string(s).has_value());
  CHECK_FALSE(verdict_from_string("TRUE").has_value());
}

TEST_CASE("reports are byte-stable modulo timing under a fixed seed") {
  std::string a = strip_timing(emit_report(run_catalog("irred1.ind"), ReportFormat::Structured));
  std::string b = strip_timing(emit_report(run_catalog("irred1.ind"), ReportFormat::Structured));
  CHECK(a == b);
}

TEST_CASE("golden report for irred1 under seed 42") {
  Report r = run_catalog("irred1.ind");
  std::string got = strip_timing(emit_report(r, ReportFormat::Structured));
  std::string want = slurp(std::string(INDVAR_GOLDEN_DIR) + "/irred1_report.json");
  CHECK(got == want);
}

TEST_CASE("parallel execution preserves order and content") {
  RunOverrides serial;
  RunOverrides parallel;
  parallel.jobs = 4;
  std::string a = strip_timing(
      emit_report(run_catalog("noether_demo.ind", serial), ReportFormat::Structured));
  std::string b = strip_timing(
      emit_report(run_catalog("noether_demo.ind", parallel), ReportFormat::Structured));
  CHECK(a == b);
}

TEST_CASE("per-check resource errors are captured, not fatal") {
  RunOverrides tiny;
  tiny.step_limit = 5;
  Report r = run_catalog("lines.ind", tiny);
  indvar::groebner::set_default_step_limit(1'000'000);  // restore for later tests
  CHECK(r.exit_code() == 2);
  bool some_error = false;
  for (const auto& c : r.checks) some_error |= !c.error.empty();
  CHECK(some_error);
}
