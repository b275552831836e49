#include "indvar/ideal.hpp"

#include "indvar/groebner.hpp"

namespace indvar {

Ideal::Ideal(std::vector<Polynomial> generators, int ambient) {
  auto d = std::make_shared<Data>();
  for (auto& g : generators)
    if (!g.is_zero()) d->gens.push_back(std::move(g));
  d->ambient = ambient;
  data_ = std::move(d);
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(data_->mu);
  auto it = data_->cache.find(ord);
  if (it == data_->cache.end())
    it = data_->cache.emplace(ord, groebner::reduced_basis(data_->gens, ord)).first;
  return it->second;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return groebner::normal_form(f, groebner()).is_zero();
}

bool Ideal::radical_contains(const Polynomial& f) const {
  return groebner::in_radical(f, *this);
}

bool Ideal::equals(const Ideal& o) const {
  return groebner().elements == o.groebner().elements;
}

std::string Ideal::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < data_->gens.size(); ++i) {
    if (i) s += ", ";
    s += data_->gens[i].preview();
  }
  if (data_->gens.empty()) s += "0";
  return s + ")";
}

}  // namespace indvar
