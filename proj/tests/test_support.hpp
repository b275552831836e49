#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "indvar/closed_set.hpp"
#include "indvar/decomposition.hpp"
#include "indvar/groebner.hpp"
#include "indvar/noether.hpp"
#include "indvar/poset.hpp"
#include "indvar/topology.hpp"

namespace ts {

using namespace indvar;

inline Polynomial X(int i) { return Polynomial::variable(i); }
inline Polynomial C(long n) { return Polynomial::constant(n); }

/// f1 = x1, f[k+1] = f[k]^2 + x[k+1]
inline std::shared_ptr<GeneratorRule> top_rule() {
  auto k = IntExpr::symbol("k");
  auto step = PolyExpr::add(PolyExpr::pow(PolyExpr::self(k), 2),
                            PolyExpr::var(IntExpr::add(k, IntExpr::constant(1))));
  return GeneratorRule::make("f", {{1, X(1)}}, step);
}

/// g1 = x1, g[k+1] = g[k] + x[k+1]  (so g_n = x1 + ... + xn)
inline std::shared_ptr<GeneratorRule> sum_rule() {
  auto k = IntExpr::symbol("k");
  auto step = PolyExpr::add(PolyExpr::self(k),
                            PolyExpr::var(IntExpr::add(k, IntExpr::constant(1))));
  return GeneratorRule::make("g", {{1, X(1)}}, step);
}

/// g1 = x1 - 1, g[k+1] = (x1 - (k+1)) * g[k] - x[k+1]
inline std::shared_ptr<GeneratorRule> irred2_rule() {
  auto k = IntExpr::symbol("k");
  auto kp1 = IntExpr::add(IntExpr::symbol("k"), IntExpr::constant(1));
  auto step = PolyExpr::sub(
      PolyExpr::mul(PolyExpr::sub(PolyExpr::var(IntExpr::constant(1)),
                                  PolyExpr::index_scalar(kp1)),
                    PolyExpr::self(k)),
      PolyExpr::var(kp1));
  return GeneratorRule::make("g", {{1, X(1) - C(1)}}, step);
}

/// h1 = x1, h[k+1] = h[k] + x[k+1] with doubling absent: the negative
/// control for the power-chain certificate (identical to sum_rule but named
/// separately for clarity at call sites).
inline std::shared_ptr<GeneratorRule> additive_rule() { return sum_rule(); }

inline Tower affine_tower() { return Tower::affine_space("A"); }

inline Tower irred1_tower() {
  auto f = top_rule();
  auto g = sum_rule();
  const GeneratorRule *fr = f.get(), *gr = g.get();
  Tower t("irred1", [fr, gr](int k) {
    LevelSpec s;
    s.ambient = k;
    s.gens.push_back(FactoredForm::of_rule(fr, k).times(FactoredForm::of_rule(gr, k)));
    return s;
  });
  t.hold(f);
  t.hold(g);
  t.set_decomposition([fr, gr](int k) -> std::optional<std::vector<ComponentSpec>> {
    std::vector<ComponentSpec> cs(2);
    cs[0].gens.push_back(FactoredForm::of_rule(fr, k));
    cs[1].gens.push_back(FactoredForm::of_rule(gr, k));
    return cs;
  });
  return t;
}

inline Tower irred2_tower() {
  auto g = irred2_rule();
  const GeneratorRule* gr = g.get();
  Tower t("irred2", [gr](int k) {
    LevelSpec s;
    s.ambient = k;
    std::vector<FactoredForm> y{FactoredForm::of_rule(gr, k)};
    std::vector<FactoredForm> z;
    for (int j = 2; j <= k; ++j) z.push_back(FactoredForm::of_poly(X(j)));
    s.union_parts = {std::move(y), std::move(z)};
    return s;
  });
  t.hold(g);
  t.set_decomposition([gr](int k) -> std::optional<std::vector<ComponentSpec>> {
    std::vector<ComponentSpec> cs(2);
    cs[0].gens.push_back(FactoredForm::of_rule(gr, k));
    for (int j = 2; j <= k; ++j) cs[1].gens.push_back(FactoredForm::of_poly(X(j)));
    return cs;
  });
  return t;
}

/// L_i in ambient k: x_j - 1 for j < i, x_j for i < j <= k.
inline std::vector<Polynomial> line_gens(int i, int k) {
  std::vector<Polynomial> gens;
  for (int j = 1; j < i; ++j) gens.push_back(X(j) - C(1));
  for (int j = i + 1; j <= k; ++j) gens.push_back(X(j));
  return gens;
}

inline Tower lines_tower() {
  return Tower("lines", [](int k) {
    LevelSpec s;
    s.ambient = k;
    for (int i = 1; i <= k; ++i) {
      std::vector<FactoredForm> part;
      for (const auto& g : line_gens(i, k)) part.push_back(FactoredForm::of_poly(g));
      s.union_parts.push_back(std::move(part));
    }
    return s;
  });
}

inline Ideal lines_level_ideal(int k) { return lines_tower().materialize_level(k).ideal; }

struct NamedIdeal {
  std::string name;
  Ideal ideal;
};

/// The shared small-instance catalog used by the property suites.
inline std::vector<NamedIdeal> catalog_ideals() {
  auto f = top_rule();
  auto g2 = irred2_rule()->at(2);
  auto g3 = irred2_rule()->at(3);
  std::vector<NamedIdeal> out;
  out.push_back({"circle_line", Ideal({X(1) - X(2), X(1) * X(1) + X(2) * X(2) - C(1)}, 2)});
  out.push_back({"axis_points", Ideal({g2, X(2)}, 2)});
  out.push_back({"f2", Ideal({f->at(2)}, 2)});
  out.push_back({"f3_x3", Ideal({f->at(3), X(3)}, 3)});
  out.push_back({"cross", Ideal({X(1) * X(2)}, 2)});
  out.push_back({"cusp", Ideal({X(2) * X(2) - X(1) * X(1) * X(1)}, 2)});
  out.push_back({"fat_axis", Ideal({X(1) * X(1) * X(2)}, 2)});
  out.push_back({"parabola", Ideal({X(2) - X(1) * X(1)}, 2)});
  out.push_back({"irred2_level2", groebner::intersect(Ideal({g2}, 2), Ideal({X(2)}, 2))});
  out.push_back({"irred2_level3", groebner::intersect(Ideal({g3}, 3), Ideal({X(2), X(3)}, 3))});
  out.push_back({"lines_level3", lines_level_ideal(3)});
  return out;
}

inline std::string catalog_dir() { return INDVAR_CATALOG_DIR; }

/// Deterministic small random polynomial over Q or F_p.
inline Polynomial random_poly(std::mt19937_64& rng, int nvars, int max_terms, int max_deg,
                              std::uint64_t p = 0) {
  std::vector<Polynomial::Term> terms;
  int nterms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < nterms; ++t) {
    std::vector<Monomial::Entry> exps;
    int deg_budget = max_deg;
    for (int v = 1; v <= nvars; ++v) {
      int e = static_cast<int>(rng() % 3);
      if (e > deg_budget) e = deg_budget;
      if (e > 0) exps.emplace_back(v, e);
      deg_budget -= e;
    }
    long c = static_cast<long>(rng() % 19) - 9;
    if (c == 0) c = 1;
    Coefficient coeff = p == 0 ? Coefficient::rational(c)
                               : Coefficient::mod_p(static_cast<std::uint64_t>(c + 9), p);
    terms.emplace_back(Monomial(std::move(exps)), coeff);
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace ts
