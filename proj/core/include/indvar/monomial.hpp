#pragma once

#include <string>
#include <utility>
#include <vector>

namespace indvar {

/// Variables are indexed from 1. Indices at or above kFirstAuxVar form a
/// reserved namespace for engine-internal variables (Rabinowitsch variables,
/// finiteness tags); they never collide with user variables. kCurveParam is
/// the parameter of curves A^1 -> A^n.
using VarIndex = int;
inline constexpr VarIndex kFirstAuxVar = 1 << 20;
inline constexpr VarIndex kCurveParam = (1 << 21) + 1;

inline VarIndex aux_var(int j) { return kFirstAuxVar + j; }  // j >= 1
inline bool is_aux_var(VarIndex v) { return v >= kFirstAuxVar && v != kCurveParam; }
inline bool is_curve_param(VarIndex v) { return v == kCurveParam; }

std::string var_name(VarIndex v);

/// A monomial: a finite exponent map, stored sparse, sorted by variable
/// index, with no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<VarIndex, int>;

  Monomial() = default;  // the monomial 1
  explicit Monomial(std::vector<Entry> exponents);

  static Monomial variable(VarIndex v, int e = 1);

  bool is_unit() const { return exps_.empty(); }
  int degree() const;
  int exponent(VarIndex v) const;
  const std::vector<Entry>& exponents() const { return exps_; }
  VarIndex max_var() const { return exps_.empty() ? 0 : exps_.back().first; }
  /// True when every variable of the monomial equals v (a pure power of v).
  bool is_pure_power_of(VarIndex v) const;

  bool divides(const Monomial& m) const;
  bool coprime_with(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  /// Exact quotient; requires d.divides(*this).
  Monomial divide_exact(const Monomial& d) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
  bool operator!=(const Monomial& m) const { return !(*this == m); }

  /// Fixed total order used for canonical term storage: degree, then the
  /// exponent vector scanned from the highest variable downwards (graded
  /// reverse lexicographic). Returns <0, 0, >0.
  static int cmp(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  std::vector<Entry> exps_;
};

}  // namespace indvar
