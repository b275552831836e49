#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indvar/polynomial.hpp"

namespace indvar {

/// Verdicts are depth/degree-bounded: a certificate never claims more than
/// what was checked at its truncation parameters.
enum class Verdict {
  CertifiedTrue,
  CertifiedFalse,
  FailsUpToDepth,
  Conditional,
  Inconclusive,
};

std::string to_string(Verdict v);
std::optional<Verdict> verdict_from_string(const std::string& s);

/// A replayable verdict: the three-valued (plus FAILS_UP_TO_DEPTH and
/// CONDITIONAL) outcome together with the parameters it was established at
/// and an evidence trace.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  int depth = 0;
  int degree_bound = -1;  // -1 when not applicable
  std::vector<std::string> evidence;

  // Structured payloads, populated by the checks that produce them.
  std::vector<Polynomial> witnesses;           // separating functions, relations
  std::vector<std::pair<int, int>> level_map;  // interleaving i -> j; negative
                                               // i marks the reverse direction
  std::vector<int> chain;                       // component index per level
  long space_dimension = -1;                    // separation search nullspace dim
  long steps = 0;                               // reduction steps consumed

  bool is(Verdict v) const { return verdict == v; }
  /// "Non-failing" in the CLI exit-code sense.
  bool non_false() const {
    return verdict != Verdict::CertifiedFalse && verdict != Verdict::FailsUpToDepth;
  }

  Certificate& note(std::string line) {
    evidence.push_back(std::move(line));
    return *this;
  }

  static Certificate make(Verdict v, int depth, int degree_bound = -1) {
    Certificate c;
    c.verdict = v;
    c.depth = depth;
    c.degree_bound = degree_bound;
    return c;
  }
};

}  // namespace indvar
