#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "indvar/closed_set.hpp"
#include "indvar/dsl/ast.hpp"

namespace indvar {
namespace dsl {

/// Effective execution parameters after applying overrides.
struct RunParams {
  int depth = 6;
  int degbound = 8;
  long seed = 42;
};

class NameError : public std::runtime_error {
 public:
  NameError(SrcLoc loc, const std::string& msg)
      : std::runtime_error("name error at line " + std::to_string(loc.line) +
                           ", column " + std::to_string(loc.col) + ": " + msg),
        loc_(loc) {}
  SrcLoc loc() const { return loc_; }

 private:
  SrcLoc loc_;
};

struct BoundCheck {
  CheckDecl::Kind kind = CheckDecl::Kind::Filtration;
  std::string kind_name;  // e.g. "indclosed", "noether normalize"
  std::string label;      // target description
  std::optional<int> depth;
  std::optional<int> degbound;
  std::optional<long> seed;
  std::optional<Verdict> expect;
  std::function<Certificate(const RunParams&)> run;
};

/// Names resolved and declarations turned into live towers, closed sets and
/// executable checks. Throws NameError on unresolved or duplicate names.
struct BoundSpec {
  std::map<std::string, Tower> towers;
  std::map<std::string, ClosedSetTower> closed_sets;
  std::vector<BoundCheck> checks;
};

BoundSpec bind_spec(const SpecFile& spec);

}  // namespace dsl
}  // namespace indvar
