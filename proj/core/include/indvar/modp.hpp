#pragma once

#include <cstdint>
#include <vector>

#include "indvar/ideal.hpp"
#include "indvar/polynomial.hpp"

namespace indvar {
namespace modp {

/// A rational polynomial with coefficients reduced mod p, flattened for fast
/// repeated evaluation. Throws if a coefficient denominator vanishes mod p.
struct ReducedPoly {
  struct Term {
    std::uint64_t coeff;
    std::vector<std::pair<int, int>> exps;  // (0-based variable, exponent)
  };
  std::uint64_t p = 0;
  std::vector<Term> terms;

  std::uint64_t eval(const std::vector<std::uint64_t>& point) const;
};

ReducedPoly reduce(const Polynomial& f, std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p);

/// All points of V(I) over F_p by full enumeration of F_p^ambient.
/// Guarded to ambient <= 3.
std::vector<std::vector<std::uint64_t>> variety_points(const Ideal& I, std::uint64_t p);

/// Reduce a rational polynomial to an F_p polynomial (same term structure).
Polynomial to_mod_p_poly(const Polynomial& f, std::uint64_t p);

}  // namespace modp
}  // namespace indvar
