#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "indvar/polynomial.hpp"

namespace indvar {

/// An affine-linear curve A^1 -> A^n, t |-> base + t*direction, extended by
/// zero coordinates beyond the base point. The per-level substitution sends
/// x_i to an affine-linear polynomial in the parameter t.
class CurveRule {
 public:
  CurveRule(std::vector<mpq_class> base, std::vector<mpq_class> direction);

  /// Total assignment for x_1..x_level (zero beyond the base point).
  std::map<VarIndex, Polynomial> substitution(int level) const;

  /// The image polynomial of a single coordinate.
  Polynomial image_of(VarIndex i) const;

  /// The rational point gamma(t0) in A^level.
  std::vector<Coefficient> point_at(const mpq_class& t0, int level) const;

  int base_length() const { return static_cast<int>(base_.size()); }

 private:
  std::vector<mpq_class> base_;
  std::vector<mpq_class> dir_;
};

}  // namespace indvar
