#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "indvar/coefficient.hpp"
#include "indvar/monomial.hpp"
#include "indvar/order.hpp"

namespace indvar {

struct Certificate;

/// Sentinel degree of the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

/// A sparse multivariate polynomial in countably many variables x1, x2, ...
/// over Q or over a prime field. Terms are kept canonical: sorted by
/// Monomial::cmp, no zero coefficients, all coefficients from one field.
/// A polynomial knows its support, not an ambient dimension.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Coefficient>;

  Polynomial() = default;  // zero

  static Polynomial constant(Coefficient c);
  static Polynomial constant(long n) { return constant(Coefficient::rational(n)); }
  static Polynomial rational(long num, long den) {
    return constant(Coefficient::rational(num, den));
  }
  static Polynomial variable(VarIndex v, int e = 1);
  static Polynomial term(Coefficient c, Monomial m);
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// 0 for rational (or zero) polynomials, p for F_p polynomials.
  std::uint64_t field_prime() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Coefficient& c) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  int total_degree() const;  // kDegreeOfZero for the zero polynomial
  int degree_in(VarIndex v) const;
  std::vector<VarIndex> support() const;
  VarIndex max_var() const;
  bool involves(VarIndex v) const { return degree_in(v) > 0; }

  Coefficient coefficient(const Monomial& m) const;
  Coefficient constant_coefficient() const { return coefficient(Monomial()); }

  /// Substitute 0 for every ordinary variable x_i with i > n (the standard
  /// embedding of the first n coordinates). Auxiliary variables and the
  /// curve parameter are untouched.
  Polynomial restrict_to_level(int n) const;

  /// Substitute polynomials for variables. The assignment must cover every
  /// variable occurring in the polynomial.
  Polynomial substitute(const std::map<VarIndex, Polynomial>& assignment) const;

  Polynomial partial_derivative(VarIndex v) const;

  /// Evaluate at a rational point (x_1, ..., x_n); variables beyond the
  /// point's length evaluate to 0.
  Coefficient evaluate(const std::vector<Coefficient>& point) const;

  std::pair<Monomial, Coefficient> leading_term(const MonomialOrder& ord) const;
  Monomial leading_monomial(const MonomialOrder& ord) const;
  Polynomial monic(const MonomialOrder& ord) const;

  std::string str() const;
  /// Truncated rendering for evidence traces.
  std::string preview(std::size_t max_terms = 6) const;

 private:
  void assert_nonzero(const char* what) const;

  std::vector<Term> terms_;
};

Polynomial operator*(const Coefficient& c, const Polynomial& p);

/// Sufficient irreducibility criterion: if some variable occurs in f with
/// degree exactly 1 and constant nonzero coefficient, then f = c*x_k + B in
/// which B does not involve x_k, the quotient ring is a polynomial ring and
/// (f) is prime. Returns CERTIFIED_TRUE with the variable as evidence, or
/// INCONCLUSIVE; throws std::invalid_argument on constant input.
Certificate graph_irreducible(const Polynomial& f);

}  // namespace indvar
