#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "indvar/certificate.hpp"
#include "indvar/groebner.hpp"
#include "indvar/ideal.hpp"
#include "indvar/rule.hpp"

namespace indvar {

struct TowerLevel {
  int ambient = 0;
  Ideal ideal;
};

/// A claimed irreducible piece of a level: generators in factored form plus
/// an optional user note when irreducibility is declared rather than
/// certified.
struct ComponentSpec {
  std::vector<FactoredForm> gens;
  bool declared_only = false;
  std::string note;
};

/// Recipe for one tower level. Either direct generators, or a union of
/// generator families: the level variety is the union of the family
/// varieties, so the level ideal is the intersection of the family ideals.
struct LevelSpec {
  int ambient = 0;
  std::vector<FactoredForm> gens;
  std::vector<std::vector<FactoredForm>> union_parts;

  bool is_union() const { return !union_parts.empty(); }
};

/// A filtration of affine varieties along standard coordinate embeddings:
/// level k is a closed subvariety of A^{n_k} with n_k nondecreasing and
/// X_k contained in X_{k+1}. Levels are produced lazily by a rule and
/// memoized; handles share state and are cheap to copy.
class Tower {
 public:
  using LevelFn = std::function<LevelSpec(int)>;
  using DecompositionFn =
      std::function<std::optional<std::vector<ComponentSpec>>(int)>;

  Tower(std::string name, LevelFn fn);

  /// A^1 in A^2 in A^3 in ... (every level ideal zero).
  static Tower affine_space(std::string name);
  /// X_k = V(rule[k]) in A^k.
  static Tower principal(std::string name, std::shared_ptr<const GeneratorRule> rule);
  /// The same variety at every level.
  static Tower constant(std::string name, Ideal ideal, int ambient);
  /// Finitely many explicit levels (queries beyond throw RuleError).
  static Tower from_levels(std::string name, std::vector<TowerLevel> levels);

  const std::string& name() const;

  /// Level recipe without expansion (memoized).
  const LevelSpec& level_spec(int k) const;
  int ambient_at(int k) const { return level_spec(k).ambient; }

  /// Expanded level: the defining ideal, with union parts intersected.
  /// Deterministic and memoized.
  TowerLevel materialize_level(int k) const;

  void set_decomposition(DecompositionFn fn);
  std::optional<std::vector<ComponentSpec>> declared_components(int k) const;

  /// Keep rule objects (or other owners referenced by level specs) alive.
  void hold(std::shared_ptr<const void> owner);

 private:
  struct State;
  std::shared_ptr<State> st_;
};

/// Compatible sequence of regular functions: level k carries a polynomial
/// representative of a function on X_k.
class RegularFunctionTower {
 public:
  RegularFunctionTower(std::string name, std::function<Polynomial(int)> value_rule);

  const std::string& name() const { return name_; }
  Polynomial at(int k) const;

 private:
  std::string name_;
  std::function<Polynomial(int)> rule_;
};

/// Is T a filtration: for all k < depth, is X_k contained in X_{k+1}?
/// Containment of varieties is tested by radical membership of the restricted
/// generators; for rule-defined levels the structural factored test is tried
/// first so that squaring recursions need no expansion.
Certificate check_filtration(const Tower& T, int depth);

/// Is phi a regular function on the tower: restrict(phi_{k+1}, n_k) - phi_k
/// in I_k for all k < depth (exact ideal membership)?
Certificate check_regular_function(const RegularFunctionTower& phi, const Tower& T,
                                   int depth);

/// Restricted filtration equivalence (identity bijection): every level of T
/// sits inside some level of U within depth and conversely. CERTIFIED_TRUE
/// carries the interleaving maps; a rational witness point that escapes every
/// level of the other tower makes the failure CERTIFIED_FALSE, otherwise a
/// containment failure near the depth horizon stays INCONCLUSIVE.
Certificate interleaves(const Tower& T, const Tower& U, int depth);

/// Shared helper: does the factored candidate lie in sqrt(I_k) for the
/// level's generator family, trying the structural test before expanding?
bool generator_in_level_radical(const FactoredForm& candidate, const Tower& T, int k);

}  // namespace indvar
