#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "indvar/tower.hpp"

namespace indvar {

/// Levelwise closed subsets Y_k = V(J_k) of a tower's levels: a rule
/// producing the generators of J_k in ambient n_k. The enclosing tower is
/// part of the value; Y_k is expected to lie inside X_k (checked by
/// ind_closed_check).
class ClosedSetTower {
 public:
  using GensFn = std::function<std::vector<FactoredForm>(int)>;

  ClosedSetTower(std::string name, Tower ambient, GensFn j_rule);

  /// Y_k = V(rule[k]) inside the tower's levels.
  static ClosedSetTower principal(std::string name, Tower ambient,
                                  std::shared_ptr<const GeneratorRule> rule);

  const std::string& name() const { return st_->name; }
  const Tower& ambient_tower() const { return st_->ambient; }

  std::vector<FactoredForm> gens_factored(int k) const;
  /// Expanded J_k (generators only, in ambient n_k). Memoized.
  Ideal ideal_at(int k) const;

 private:
  struct State {
    std::string name;
    Tower ambient;
    GensFn fn;
    std::vector<std::shared_ptr<const void>> held;
    mutable std::mutex mu;
    mutable std::map<int, Ideal> memo;

    State(std::string n, Tower t, GensFn f)
        : name(std::move(n)), ambient(std::move(t)), fn(std::move(f)) {}
  };
  std::shared_ptr<State> st_;
};

}  // namespace indvar
