#include "indvar/closed_set.hpp"

namespace indvar {

ClosedSetTower::ClosedSetTower(std::string name, Tower ambient, GensFn j_rule)
    : st_(std::make_shared<State>(std::move(name), std::move(ambient),
                                  std::move(j_rule))) {}

ClosedSetTower ClosedSetTower::principal(std::string name, Tower ambient,
                                         std::shared_ptr<const GeneratorRule> rule) {
  const GeneratorRule* raw = rule.get();
  ClosedSetTower y(std::move(name), std::move(ambient), [raw](int k) {
    return std::vector<FactoredForm>{FactoredForm::of_rule(raw, k)};
  });
  y.st_->held.push_back(rule);
  return y;
}

std::vector<FactoredForm> ClosedSetTower::gens_factored(int k) const {
  return st_->fn(k);
}

Ideal ClosedSetTower::ideal_at(int k) const {
  {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->memo.find(k);
    if (it != st_->memo.end()) return it->second;
  }
  std::vector<Polynomial> gens;
  for (const auto& f : st_->fn(k)) gens.push_back(f.expand());
  Ideal ideal(std::move(gens), st_->ambient.ambient_at(k));
  std::lock_guard<std::mutex> lock(st_->mu);
  return st_->memo.emplace(k, ideal).first->second;
}

}  // namespace indvar
