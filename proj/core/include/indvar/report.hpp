#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indvar/dsl/binder.hpp"

namespace indvar {

/// Command-line overrides: when set they take precedence over the per-check
/// parameters, which in turn beat the defaults (depth 6, degbound 8, seed 42).
struct RunOverrides {
  std::optional<int> depth;
  std::optional<int> degbound;
  std::optional<long> seed;
  std::optional<long> step_limit;
  int jobs = 1;
};

struct CheckOutcome {
  std::string kind;
  std::string label;
  int depth = 6;
  int degbound = 8;
  long seed = 42;
  Certificate cert;
  std::vector<std::string> witness_previews;  // rendered certificate witnesses
  std::string expect;  // empty = default expectation (non-failing)
  bool ok = false;
  std::string error;  // captured resource/precondition error
  long ms = 0;
  long steps = 0;
};

struct Report {
  std::string schema = "indvar-report/1";
  std::string source;
  std::vector<CheckOutcome> checks;

  bool has_error() const;
  /// 0: all checks meet their expectation; 1: some verdict fails it;
  /// 2: a parse or resource error occurred.
  int exit_code() const;
};

/// Execute every check directive. Independent directives may run
/// concurrently (jobs > 1); the report order always matches declaration
/// order and the content is deterministic for a fixed seed.
Report run_checks(const dsl::BoundSpec& spec, const RunOverrides& overrides,
                  const std::string& source_name = "");

enum class ReportFormat { Text, Structured };

/// Deterministic serialization; the structured format is the versioned
/// schema "indvar-report/1" and is byte-stable for a fixed seed except for
/// the timing fields.
std::string emit_report(const Report& report, ReportFormat format);

/// Inverse of the structured emission (round-trip exact).
Report report_from_json(const std::string& json_text);

}  // namespace indvar
