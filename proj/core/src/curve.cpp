#include "indvar/curve.hpp"

#include <stdexcept>

namespace indvar {

CurveRule::CurveRule(std::vector<mpq_class> base, std::vector<mpq_class> direction)
    : base_(std::move(base)), dir_(std::move(direction)) {
  if (dir_.size() > base_.size())
    throw std::invalid_argument("direction longer than base point");
  dir_.resize(base_.size(), mpq_class(0));
}

Polynomial CurveRule::image_of(VarIndex i) const {
  if (i <= 0) throw std::invalid_argument("coordinate index must be positive");
  if (i > static_cast<VarIndex>(base_.size())) return {};
  Polynomial img = Polynomial::constant(Coefficient::rational(base_[i - 1]));
  if (dir_[i - 1] != 0)
    img += Coefficient::rational(dir_[i - 1]) * Polynomial::variable(kCurveParam);
  return img;
}

std::map<VarIndex, Polynomial> CurveRule::substitution(int level) const {
  std::map<VarIndex, Polynomial> sub;
  for (VarIndex i = 1; i <= level; ++i) sub[i] = image_of(i);
  return sub;
}

std::vector<Coefficient> CurveRule::point_at(const mpq_class& t0, int level) const {
  std::vector<Coefficient> p;
  p.reserve(level);
  for (VarIndex i = 1; i <= level; ++i) {
    mpq_class v(0);
    if (i <= static_cast<VarIndex>(base_.size())) v = base_[i - 1] + dir_[i - 1] * t0;
    p.push_back(Coefficient::rational(v));
  }
  return p;
}

}  // namespace indvar
