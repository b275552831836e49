#include "indvar/modp.hpp"

#include <stdexcept>

namespace indvar {
namespace modp {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % p;
  while (e) {
    if (e & 1) acc = (acc * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

std::uint64_t coeff_mod_p(const Coefficient& c, std::uint64_t p) {
  if (!c.is_rational()) {
    if (c.prime() != p) throw std::invalid_argument("coefficient from a different prime field");
    return c.mod_p_value();
  }
  const mpq_class& q = c.rational_value();
  std::uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p));
  std::uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
  if (d == 0)
    throw std::invalid_argument("coefficient denominator vanishes mod p");
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(n) * mod_inverse(d, p)) % p);
}

}  // namespace

ReducedPoly reduce(const Polynomial& f, std::uint64_t p) {
  ReducedPoly r;
  r.p = p;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t cc = coeff_mod_p(c, p);
    if (cc == 0) continue;
    ReducedPoly::Term t;
    t.coeff = cc;
    for (const auto& [v, e] : m.exponents()) {
      if (is_aux_var(v) || is_curve_param(v))
        throw std::invalid_argument("auxiliary variable in mod-p evaluation");
      t.exps.emplace_back(v - 1, e);
    }
    r.terms.push_back(std::move(t));
  }
  return r;
}

std::uint64_t ReducedPoly::eval(const std::vector<std::uint64_t>& point) const {
  unsigned __int128 acc = 0;
  for (const auto& t : terms) {
    unsigned __int128 v = t.coeff;
    for (const auto& [var, e] : t.exps) {
      std::uint64_t x = var < static_cast<int>(point.size()) ? point[var] : 0;
      if (x == 0) {
        v = 0;
        break;
      }
      v = (v * pow_mod(x, static_cast<std::uint64_t>(e), p)) % p;
    }
    acc = (acc + v) % p;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::vector<std::uint64_t>> variety_points(const Ideal& I, std::uint64_t p) {
  const int n = I.ambient();
  if (n > 3) throw std::invalid_argument("variety enumeration limited to ambient <= 3");
  std::vector<ReducedPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(reduce(g, p));

  std::vector<std::vector<std::uint64_t>> points;
  std::vector<std::uint64_t> x(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    bool on = true;
    for (const auto& g : gens)
      if (g.eval(x) != 0) {
        on = false;
        break;
      }
    if (on) points.push_back(x);
  }
  return points;
}

Polynomial to_mod_p_poly(const Polynomial& f, std::uint64_t p) {
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : f.terms())
    terms.emplace_back(m, Coefficient::mod_p(coeff_mod_p(c, p), p));
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace modp
}  // namespace indvar
