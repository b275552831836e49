#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "indvar/certificate.hpp"
#include "indvar/rule.hpp"

namespace indvar {
namespace dsl {

struct SrcLoc {
  int line = 1;
  int col = 1;
};

/// Parse-time polynomial expression; names are resolved by the binder
/// (variable family vs. rule reference).
struct PolyNode {
  enum class Kind { Rat, Ref, Scalar, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Rat;
  mpq_class value = 0;     // Rat
  std::string name;        // Ref: family or rule name
  IntExpr index;           // Ref index expression
  std::string scalar_sym;  // Scalar: bare index symbol used as a number
  int exponent = 0;        // Pow
  std::vector<PolyNode> kids;
  SrcLoc loc;
};

/// Generator-list item: a polynomial expression or a bounded comprehension
/// gens(j = lo..hi : items).
struct PolyItem {
  bool is_gens = false;
  PolyNode expr;  // !is_gens
  std::string binder;
  IntExpr lo, hi;
  std::vector<PolyItem> body;  // is_gens
  SrcLoc loc;
};

/// ideal(...) or a finite/bounded union of ideals (variety union).
struct IdealNode {
  enum class Kind { Ideal, Union, UnionRange };
  Kind kind = Kind::Ideal;
  std::vector<PolyItem> gens;    // Ideal
  std::vector<IdealNode> parts;  // Union
  std::string binder;            // UnionRange
  IntExpr lo, hi;
  std::vector<IdealNode> body;  // UnionRange body (one element)
  SrcLoc loc;
};

struct RuleEntry {
  bool is_step = false;  // lhs "k+1" vs. an integer level
  int base_index = 1;
  PolyNode expr;
  SrcLoc loc;
};

struct RuleDecl {
  std::string name;
  std::vector<RuleEntry> entries;
  SrcLoc loc;
};

struct LevelDecl {
  bool generic = true;  // lhs "k" vs. an integer level
  int index = 0;
  IdealNode expr;
  SrcLoc loc;
};

struct ComponentNode {
  IdealNode ideal;
  bool declared = false;
  std::string note;
  SrcLoc loc;
};

struct DecomposeDecl {
  bool generic = true;
  int index = 0;
  std::vector<ComponentNode> components;
  SrcLoc loc;
};

struct TowerDecl {
  std::string name;
  std::string var_family = "x";
  std::vector<RuleDecl> rules;
  std::vector<LevelDecl> levels;
  std::vector<DecomposeDecl> decomposes;
  SrcLoc loc;
};

struct ClosedSetDecl {
  std::string name;
  std::string tower;
  std::vector<LevelDecl> levels;
  SrcLoc loc;
};

struct CheckDecl {
  enum class Kind {
    Filtration,
    IndClosed,
    Density,
    Separation,
    Stabilize,
    Directed,
    Irreducible,
    Noether,
  };
  Kind kind = Kind::Filtration;
  std::string target;       // tower or closed-set name
  std::string rule_name;    // density: TOWER.RULE
  std::string noether_sub;  // normalize | extend | witness
  std::vector<IdealNode> ideals;
  int ambient = 0;
  std::vector<mpq_class> point;
  std::vector<PolyItem> h_polys;
  int from = 1;
  std::optional<int> depth;
  std::optional<int> degbound;
  std::optional<long> seed;
  std::optional<mpq_class> coeffs;
  std::optional<Verdict> expect;
  SrcLoc loc;
};

struct SpecFile {
  std::vector<TowerDecl> towers;
  std::vector<ClosedSetDecl> closed_sets;
  std::vector<CheckDecl> checks;
  /// Declaration order for pretty-printing: (0,i) tower, (1,i) closed set,
  /// (2,i) check.
  std::vector<std::pair<int, std::size_t>> order;
};

/// Diagnostic with source location and the token set that was expected.
struct Diagnostic {
  SrcLoc loc;
  std::string message;
  std::vector<std::string> expected;

  std::string render() const;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(Diagnostic d)
      : std::runtime_error(d.render()), diagnostic_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

/// Parse a spec file; throws ParseError with a located diagnostic. Never
/// crashes on arbitrary input (fuzz-total).
SpecFile parse_spec(const std::string& text);

/// Canonical rendering; parse(pretty(parse(text))) is structurally the
/// identity.
std::string pretty_print(const SpecFile& spec);

}  // namespace dsl
}  // namespace indvar
