#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace indvar {

/// An exact field element: a rational in lowest terms, or an element of a
/// prime field F_p for a machine-word prime p. Rationals are the default
/// everywhere; F_p is used for randomized consistency sampling.
class Coefficient {
 public:
  /// Rational zero.
  Coefficient() : q_(0) {}

  static Coefficient rational(mpq_class v);
  static Coefficient rational(long num, long den = 1);
  static Coefficient mod_p(std::uint64_t value, std::uint64_t p);

  bool is_rational() const { return prime_ == 0; }
  /// 0 for rationals, p for F_p values.
  std::uint64_t prime() const { return prime_; }

  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational_value() const;
  std::uint64_t mod_p_value() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  /// Exact division; the divisor must be nonzero.
  Coefficient& operator/=(const Coefficient& o);
  Coefficient inverse() const;

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  bool operator==(const Coefficient& o) const;
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_same_field(const Coefficient& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;      // residue in [0, p)
  std::uint64_t prime_ = 0;  // 0 marks a rational
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace indvar
