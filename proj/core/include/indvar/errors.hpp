#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indvar {

/// Two coefficients from different ground fields met in one operation.
class FieldMismatchError : public std::invalid_argument {
 public:
  explicit FieldMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A reduction-step budget ran out. Carries the partial state reached so the
/// failed computation can be inspected or replayed with a larger budget.
class StepLimitError : public std::runtime_error {
 public:
  StepLimitError(const std::string& what, long steps_done,
                 std::vector<std::string> partial_state)
      : std::runtime_error(what),
        steps_done_(steps_done),
        partial_state_(std::move(partial_state)) {}

  long steps_done() const { return steps_done_; }
  const std::vector<std::string>& partial_state() const { return partial_state_; }

 private:
  long steps_done_;
  std::vector<std::string> partial_state_;
};

/// A randomized search exhausted its retry budget.
class RetryLimitError : public std::runtime_error {
 public:
  RetryLimitError(const std::string& what, int attempts,
                  std::vector<std::string> last_evidence)
      : std::runtime_error(what),
        attempts_(attempts),
        last_evidence_(std::move(last_evidence)) {}

  int attempts() const { return attempts_; }
  const std::vector<std::string>& last_evidence() const { return last_evidence_; }

 private:
  int attempts_;
  std::vector<std::string> last_evidence_;
};

/// Dimension was requested for the unit ideal (empty variety).
class EmptyVarietyError : public std::domain_error {
 public:
  explicit EmptyVarietyError(const std::string& what)
      : std::domain_error(what) {}
};

/// The monomial basis of a linear-algebra search exceeded the configured cap.
class CoefficientSpaceError : public std::runtime_error {
 public:
  CoefficientSpaceError(const std::string& what, long requested, long cap)
      : std::runtime_error(what), requested_(requested), cap_(cap) {}

  long requested() const { return requested_; }
  long cap() const { return cap_; }

 private:
  long requested_;
  long cap_;
};

/// A level rule could not produce the requested level.
class RuleError : public std::runtime_error {
 public:
  explicit RuleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace indvar
