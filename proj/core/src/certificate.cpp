#include "indvar/certificate.hpp"

namespace indvar {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedTrue:
      return "CERTIFIED_TRUE";
    case Verdict::CertifiedFalse:
      return "CERTIFIED_FALSE";
    case Verdict::FailsUpToDepth:
      return "FAILS_UP_TO_DEPTH";
    case Verdict::Conditional:
      return "CONDITIONAL";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::optional<Verdict> verdict_from_string(const std::string& s) {
  if (s == "CERTIFIED_TRUE") return Verdict::CertifiedTrue;
  if (s == "CERTIFIED_FALSE") return Verdict::CertifiedFalse;
  if (s == "FAILS_UP_TO_DEPTH") return Verdict::FailsUpToDepth;
  if (s == "CONDITIONAL") return Verdict::Conditional;
  if (s == "INCONCLUSIVE") return Verdict::Inconclusive;
  return std::nullopt;
}

}  // namespace indvar
