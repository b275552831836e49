#include "indvar/report.hpp"

#include <chrono>
#include <future>
#include <semaphore>

#include <json.hpp>

#include "indvar/errors.hpp"
#include "indvar/groebner.hpp"

namespace indvar {

namespace {

bool outcome_ok(const CheckOutcome& o) {
  if (!o.error.empty()) return false;
  if (!o.expect.empty()) return to_string(o.cert.verdict) == o.expect;
  return o.cert.non_false();
}

CheckOutcome run_one(const dsl::BoundCheck& check, const RunOverrides& ov) {
  dsl::RunParams params;
  params.depth = ov.depth.value_or(check.depth.value_or(6));
  params.degbound = ov.degbound.value_or(check.degbound.value_or(8));
  params.seed = ov.seed.value_or(check.seed.value_or(42));

  CheckOutcome out;
  out.kind = check.kind_name;
  out.label = check.label;
  out.depth = params.depth;
  out.degbound = params.degbound;
  out.seed = params.seed;
  if (check.expect) out.expect = to_string(*check.expect);

  groebner::reset_step_counter();
  auto start = std::chrono::steady_clock::now();
  try {
    out.cert = check.run(params);
  } catch (const StepLimitError& e) {
    out.error = std::string("step limit: ") + e.what();
    for (const auto& line : e.partial_state()) out.cert.evidence.push_back(line);
  } catch (const RetryLimitError& e) {
    out.error = std::string("retry limit: ") + e.what();
    for (const auto& line : e.last_evidence()) out.cert.evidence.push_back(line);
  } catch (const CoefficientSpaceError& e) {
    out.error = std::string("space limit: ") + e.what();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  auto end = std::chrono::steady_clock::now();
  out.ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  out.steps = groebner::steps_consumed();
  for (const auto& w : out.cert.witnesses) out.witness_previews.push_back(w.preview(12));
  out.ok = outcome_ok(out);
  return out;
}

}  // namespace

bool Report::has_error() const {
  for (const auto& c : checks)
    if (!c.error.empty()) return true;
  return false;
}

int Report::exit_code() const {
  if (has_error()) return 2;
  for (const auto& c : checks)
    if (!c.ok) return 1;
  return 0;
}

Report run_checks(const dsl::BoundSpec& spec, const RunOverrides& overrides,
                  const std::string& source_name) {
  if (overrides.step_limit) groebner::set_default_step_limit(*overrides.step_limit);
  Report report;
  report.source = source_name;
  report.checks.resize(spec.checks.size());

  const int jobs = std::max(1, overrides.jobs);
  if (jobs == 1 || spec.checks.size() <= 1) {
    for (std::size_t i = 0; i < spec.checks.size(); ++i)
      report.checks[i] = run_one(spec.checks[i], overrides);
    return report;
  }

  std::counting_semaphore<256> slots(jobs);
  std::vector<std::future<void>> futures;
  futures.reserve(spec.checks.size());
  for (std::size_t i = 0; i < spec.checks.size(); ++i) {
    futures.push_back(std::async(std::launch::async, [&, i] {
      slots.acquire();
      report.checks[i] = run_one(spec.checks[i], overrides);
      slots.release();
    }));
  }
  for (auto& f : futures) f.get();
  return report;
}

namespace {

nlohmann::ordered_json outcome_to_json(const CheckOutcome& o) {
  nlohmann::ordered_json j;
  j["kind"] = o.kind;
  j["label"] = o.label;
  j["params"] = {{"depth", o.depth}, {"degbound", o.degbound}, {"seed", o.seed}};
  j["verdict"] = to_string(o.cert.verdict);
  j["expect"] = o.expect;
  j["ok"] = o.ok;
  j["error"] = o.error;
  j["evidence"] = o.cert.evidence;
  j["witnesses"] = o.witness_previews;
  nlohmann::ordered_json lm = nlohmann::ordered_json::array();
  for (const auto& [a, b] : o.cert.level_map) lm.push_back({a, b});
  j["level_map"] = lm;
  j["chain"] = o.cert.chain;
  j["space_dimension"] = o.cert.space_dimension;
  j["steps"] = o.steps;
  j["ms"] = o.ms;
  return j;
}

CheckOutcome outcome_from_json(const nlohmann::ordered_json& j) {
  CheckOutcome o;
  o.kind = j.at("kind").get<std::string>();
  o.label = j.at("label").get<std::string>();
  o.depth = j.at("params").at("depth").get<int>();
  o.degbound = j.at("params").at("degbound").get<int>();
  o.seed = j.at("params").at("seed").get<long>();
  if (auto v = verdict_from_string(j.at("verdict").get<std::string>()))
    o.cert.verdict = *v;
  o.expect = j.at("expect").get<std::string>();
  o.ok = j.at("ok").get<bool>();
  o.error = j.at("error").get<std::string>();
  o.cert.evidence = j.at("evidence").get<std::vector<std::string>>();
  for (const auto& w : j.at("witnesses")) o.witness_previews.push_back(w.get<std::string>());
  for (const auto& p : j.at("level_map"))
    o.cert.level_map.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  o.cert.chain = j.at("chain").get<std::vector<int>>();
  o.cert.space_dimension = j.at("space_dimension").get<long>();
  o.steps = j.at("steps").get<long>();
  o.ms = j.at("ms").get<long>();
  return o;
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Structured) {
    nlohmann::ordered_json j;
    j["schema"] = report.schema;
    j["source"] = report.source;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) checks.push_back(outcome_to_json(c));
    j["checks"] = checks;
    int ok = 0;
    for (const auto& c : report.checks) ok += c.ok ? 1 : 0;
    j["summary"] = {{"total", report.checks.size()},
                    {"ok", ok},
                    {"exit_code", report.exit_code()}};
    return j.dump(2) + "\n";
  }

  std::string s = "indvar report";
  if (!report.source.empty()) s += " — " + report.source;
  s += "\n";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    s += "[" + std::to_string(i + 1) + "] " + c.kind + " " + c.label + "  (depth " +
         std::to_string(c.depth) + ", degbound " + std::to_string(c.degbound) +
         ", seed " + std::to_string(c.seed) + ")\n";
    if (!c.error.empty()) {
      s += "    ERROR: " + c.error + "\n";
    } else {
      s += "    verdict: " + to_string(c.cert.verdict);
      if (!c.expect.empty()) s += " (expected " + c.expect + ")";
      s += c.ok ? "  [ok]" : "  [FAIL]";
      s += "\n";
    }
    for (const auto& e : c.cert.evidence) s += "      - " + e + "\n";
    s += "    steps: " + std::to_string(c.steps) + ", ms: " + std::to_string(c.ms) + "\n";
  }
  int ok = 0;
  for (const auto& c : report.checks) ok += c.ok ? 1 : 0;
  s += "summary: " + std::to_string(report.checks.size()) + " checks, " +
       std::to_string(ok) + " ok, exit code " + std::to_string(report.exit_code()) + "\n";
  return s;
}

Report report_from_json(const std::string& json_text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(json_text);
  Report r;
  r.schema = j.at("schema").get<std::string>();
  r.source = j.at("source").get<std::string>();
  for (const auto& c : j.at("checks")) r.checks.push_back(outcome_from_json(c));
  return r;
}

}  // namespace indvar
