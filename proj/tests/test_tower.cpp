#include <doctest.h>

#include "indvar/errors.hpp"
#include "test_support.hpp"

using namespace ts;

TEST_CASE("materialize_level on the worked towers") {
  auto f = top_rule();
  Tower top = Tower::principal("top", f);
  TowerLevel l3 = top.materialize_level(3);
  CHECK(l3.ambient == 3);
  Polynomial f2 = X(1) * X(1) + X(2);
  CHECK(l3.ideal.equals(Ideal({f2 * f2 + X(3)}, 3)));

  Tower i2 = irred2_tower();
  TowerLevel l2 = i2.materialize_level(2);
  Ideal expected = groebner::intersect(Ideal({irred2_rule()->at(2)}, 2), Ideal({X(2)}, 2));
  CHECK(l2.ideal.equals(expected));

  Tower c = Tower::constant("const", Ideal({X(1) - C(1)}, 2), 2);
  CHECK(c.materialize_level(1).ideal.equals(c.materialize_level(5).ideal));
}

TEST_CASE("materialization is pure") {
  Tower i2 = irred2_tower();
  TowerLevel a = i2.materialize_level(3);
  TowerLevel b = i2.materialize_level(3);
  CHECK(a.ideal.generators() == b.ideal.generators());
  CHECK(a.ideal.str() == b.ideal.str());
}

TEST_CASE("filtration checks") {
  CHECK(check_filtration(irred1_tower(), 6).verdict == Verdict::CertifiedTrue);
  CHECK(check_filtration(lines_tower(), 6).verdict == Verdict::CertifiedTrue);

  // level 1 = V(x1 - 1) in A^1, level 2 = V(x1) in A^2: not a filtration
  Tower bad = Tower::from_levels(
      "bad", {TowerLevel{1, Ideal({X(1) - C(1)}, 1)}, TowerLevel{2, Ideal({X(1)}, 2)}});
  Certificate c = check_filtration(bad, 2);
  CHECK(c.verdict == Verdict::CertifiedFalse);
}

TEST_CASE("every built-in tower is a filtration to depth 8") {
  for (Tower t : {affine_tower(), irred1_tower(), irred2_tower(), lines_tower()}) {
    Certificate c = check_filtration(t, 8);
    REQUIRE_MESSAGE(c.verdict == Verdict::CertifiedTrue, t.name());
  }
}

TEST_CASE("regular function towers") {
  Tower A = affine_tower();
  auto g = sum_rule();
  RegularFunctionTower sum("sum", [g](int k) { return g->at(k); });
  CHECK(check_regular_function(sum, A, 6).verdict == Verdict::CertifiedTrue);

  auto f = top_rule();
  RegularFunctionTower sq("squares", [f](int k) { return f->at(k); });
  CHECK(check_regular_function(sq, A, 6).verdict == Verdict::CertifiedFalse);

  RegularFunctionTower x1("x1", [](int) { return X(1); });
  CHECK(check_regular_function(x1, irred2_tower(), 6).verdict == Verdict::CertifiedTrue);
}

TEST_CASE("regular-function compatibility is transitive in depth") {
  // On the principal curve tower, phi_k = x1 + g_k is compatible with
  // genuinely nonzero level-to-level differences (they land in (g_k)).
  auto g = irred2_rule();
  Tower curve = Tower::principal("curve", g);
  RegularFunctionTower phi("phi", [g](int k) { return X(1) + g->at(k); });
  const int d = 5;
  for (int k = 1; k < d; ++k) {
    Polynomial diff = phi.at(k + 1).restrict_to_level(k) - phi.at(k);
    CHECK_FALSE(diff.is_zero());
  }
  REQUIRE(check_regular_function(phi, curve, d).verdict == Verdict::CertifiedTrue);
  for (int k = 1; k < d; ++k) {
    TowerLevel lvl = curve.materialize_level(k);
    Polynomial diff = phi.at(d).restrict_to_level(lvl.ambient) - phi.at(k);
    CHECK((diff.is_zero() || lvl.ideal.radical_contains(diff)));
  }
}

TEST_CASE("interleaving") {
  Tower i2 = irred2_tower();
  // a tower against its own shift
  Tower shifted("irred2.shift", [i2](int k) { return i2.level_spec(k + 1); });
  Certificate c = interleaves(i2, shifted, 5);
  CHECK(c.verdict == Verdict::CertifiedTrue);

  // the affine tower never fits inside the squaring hypersurfaces
  Tower A = affine_tower();
  Tower top = Tower::principal("top", top_rule());
  Certificate c2 = interleaves(A, top, 4);
  CHECK(c2.verdict == Verdict::CertifiedFalse);

  // same varieties, different presentation of the generators
  auto g = irred2_rule();
  const GeneratorRule* gr = g.get();
  Tower explicit_pres("irred2.explicit", [gr](int k) {
    LevelSpec s;
    s.ambient = k;
    for (int j = 2; j <= k; ++j)
      s.gens.push_back(FactoredForm::of_rule(gr, k).times(FactoredForm::of_poly(X(j))));
    return s;
  });
  explicit_pres.hold(g);
  Certificate c3 = interleaves(irred2_tower(), explicit_pres, 4);
  CHECK(c3.verdict == Verdict::CertifiedTrue);
}

TEST_CASE("interleaving certificates are reflexive and symmetric") {
  for (Tower t : {irred2_tower(), lines_tower()}) {
    Certificate self = interleaves(t, t, 4);
    REQUIRE(self.verdict == Verdict::CertifiedTrue);
    for (const auto& [i, j] : self.level_map) CHECK(std::abs(i) == j);

    Tower shifted(t.name() + ".shift", [t](int k) { return t.level_spec(k + 1); });
    Certificate fwd = interleaves(t, shifted, 4);
    Certificate bwd = interleaves(shifted, t, 4);
    CHECK(fwd.verdict == Verdict::CertifiedTrue);
    CHECK(bwd.verdict == Verdict::CertifiedTrue);
  }
}

TEST_CASE("rule evaluation failures surface as errors") {
  Tower t = Tower::from_levels("two", {TowerLevel{1, Ideal({}, 1)}});
  CHECK_THROWS_AS(t.materialize_level(2), RuleError);
}
