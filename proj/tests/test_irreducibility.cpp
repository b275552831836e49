#include <doctest.h>

#include "indvar/modp.hpp"
#include "test_support.hpp"

using namespace ts;

TEST_CASE("verify_decomposition on the worked examples") {
  auto f = top_rule();
  auto s = sum_rule();
  Ideal level2({f->at(2) * s->at(2)}, 2);
  Certificate ok = verify_decomposition(level2, {Ideal({f->at(2)}, 2), Ideal({s->at(2)}, 2)});
  CHECK(ok.verdict == Verdict::CertifiedTrue);

  // irred2 level n: curve component by the graph criterion, axis component
  // as a coordinate subspace
  auto g = irred2_rule();
  for (int n = 2; n <= 4; ++n) {
    Ideal level = irred2_tower().materialize_level(n).ideal;
    std::vector<Polynomial> axis;
    for (int j = 2; j <= n; ++j) axis.push_back(X(j));
    Certificate c = verify_decomposition(level, {Ideal({g->at(n)}, n), Ideal(axis, n)});
    CHECK(c.verdict == Verdict::CertifiedTrue);
  }

  // dropping a component breaks the union
  Ideal level2_irred2 = irred2_tower().materialize_level(2).ideal;
  Certificate bad = verify_decomposition(level2_irred2, {Ideal({g->at(2)}, 2)});
  CHECK(bad.verdict == Verdict::CertifiedFalse);
}

TEST_CASE("declared components downgrade the verdict to CONDITIONAL") {
  Tower t("declared", [](int k) {
    LevelSpec s;
    s.ambient = k;
    s.gens.push_back(FactoredForm::of_poly(X(1) * X(1) + C(1)));
    return s;
  });
  t.set_decomposition([](int) -> std::optional<std::vector<ComponentSpec>> {
    ComponentSpec c;
    c.gens.push_back(FactoredForm::of_poly(X(1) * X(1) + C(1)));
    c.declared_only = true;
    c.note = "irreducible over Q by inspection";
    return std::vector<ComponentSpec>{c};
  });
  auto dec = decompose_level(t, 2);
  REQUIRE(dec.has_value());
  CHECK(dec->verification.verdict == Verdict::Conditional);
}

TEST_CASE("automatic splitting of an explicitly factored generator") {
  auto f = top_rule();
  auto s = sum_rule();
  const GeneratorRule *fr = f.get(), *sr = s.get();
  Tower t("product", [fr, sr](int k) {
    LevelSpec spec;
    spec.ambient = k;
    spec.gens.push_back(FactoredForm::of_rule(fr, k).times(FactoredForm::of_rule(sr, k)));
    return spec;
  });
  t.hold(f);
  t.hold(s);
  auto dec = decompose_level(t, 3);
  REQUIRE(dec.has_value());
  CHECK(dec->components.size() == 2);
  CHECK(dec->verification.verdict == Verdict::CertifiedTrue);
}

TEST_CASE("component poset of the squaring chain is a total order") {
  Tower top = Tower::principal("top", top_rule());
  ComponentPoset P = component_poset(top, 5);
  for (int k = 1; k <= 5; ++k)
    for (int j = k; j <= 5; ++j)
      CHECK(P.leq({k, 0}, {j, 0}));
}

TEST_CASE("irred2 poset: chains stay separate") {
  ComponentPoset P = component_poset(irred2_tower(), 8);
  for (int k = 2; k < 8; ++k) {
    CHECK(P.leq({k, 0}, {k + 1, 0}));       // Y_k in Y_{k+1}
    CHECK(P.leq({k, 1}, {k + 1, 1}));       // Z_k in Z_{k+1}
    CHECK_FALSE(P.leq({k, 0}, {k + 1, 1}));  // no cross inclusions
    CHECK_FALSE(P.leq({k, 1}, {k + 1, 0}));
  }
  // the witness of separation: (k+1) e1 lies on Z but not on Y_k
  auto g = irred2_rule();
  for (int k = 2; k <= 7; ++k) {
    std::vector<Coefficient> p(static_cast<std::size_t>(k), Coefficient());
    p[0] = Coefficient::rational(k + 1);
    CHECK_FALSE(g->value_at(k, p).is_zero());
  }
}

TEST_CASE("poset relations validated on random F_101 points") {
  ComponentPoset P = component_poset(irred2_tower(), 3);
  std::mt19937_64 rng(71);
  // Y_2 in Y_3: sample points of Y_2 mod 101 and check the Y_3 generator
  // restricted to ambient 2 vanishes there.
  Ideal y2({irred2_rule()->at(2)}, 2);
  auto pts = modp::variety_points(y2, 101);
  REQUIRE(!pts.empty());
  Polynomial g3r = irred2_rule()->at(3).restrict_to_level(2);
  modp::ReducedPoly r = modp::reduce(g3r, 101);
  for (int i = 0; i < 20; ++i) {
    const auto& p = pts[rng() % pts.size()];
    CHECK(r.eval(p) == 0);
  }
}

TEST_CASE("directedness") {
  ComponentPoset P2 = component_poset(irred2_tower(), 8);
  Certificate d2 = is_directed(P2, 8);
  CHECK(d2.verdict == Verdict::FailsUpToDepth);
  bool y2z2 = false;
  for (const auto& e : d2.evidence)
    y2z2 |= e.find("level 2 component 1") != std::string::npos &&
            e.find("level 2 component 2") != std::string::npos;
  CHECK(y2z2);

  ComponentPoset PA = component_poset(affine_tower(), 6);
  CHECK(is_directed(PA, 6).verdict == Verdict::CertifiedTrue);

  ComponentPoset P1 = component_poset(irred1_tower(), 8);
  Certificate d1 = is_directed(P1, 8);
  CHECK(d1.verdict == Verdict::FailsUpToDepth);
  bool pair22 = false;
  for (const auto& e : d1.evidence)
    pair22 |= e.find("level 2 component 1") != std::string::npos &&
              e.find("level 2 component 2") != std::string::npos;
  CHECK(pair22);
}

TEST_CASE("directedness replays monotonically in depth") {
  for (int d = 2; d <= 6; ++d) {
    ComponentPoset P = component_poset(affine_tower(), d);
    CHECK(is_directed(P, d).verdict == Verdict::CertifiedTrue);
  }
}

TEST_CASE("irreducibility verdicts") {
  Certificate a = irreducibility_verdict(affine_tower(), 5, 4);
  CHECK(a.verdict == Verdict::CertifiedTrue);

  Certificate i2 = irreducibility_verdict(irred2_tower(), 6, 4);
  CHECK(i2.verdict == Verdict::CertifiedTrue);
  REQUIRE(i2.chain.size() == 6);
  for (int idx : i2.chain) CHECK(idx == 0);  // the curve chain at every level

  Certificate i1 = irreducibility_verdict(irred1_tower(), 6, 4);
  CHECK(i1.verdict == Verdict::CertifiedFalse);
}

TEST_CASE("irreducible and reducible evidence never coexist") {
  // On the reducible tower the dense-chain route must not fire: the other
  // component is a hypersurface, not an axis line, so the line-density step
  // is inapplicable.
  ComponentPoset P = component_poset(irred1_tower(), 4);
  const Component& other = P.comp({4, 1});
  Ideal oid = other.expanded(4);
  const GroebnerBasis& gb = oid.groebner();
  bool axis_like = true;
  for (const auto& g : gb.elements) axis_like &= g.term_count() == 1;
  CHECK_FALSE(axis_like);

  // Conversely the irreducible tower admits no pair of levelwise-closed
  // covering chains: the curve chain is not levelwise closed.
  Tower i2 = irred2_tower();
  ClosedSetTower ychain = ClosedSetTower::principal("Y", i2, irred2_rule());
  CHECK(ind_closed_check(ychain, 5).verdict == Verdict::CertifiedFalse);
}

TEST_CASE("irred2 has exactly two components at levels 2..8") {
  Tower t = irred2_tower();
  for (int n = 2; n <= 8; ++n) {
    auto dec = decompose_level(t, n);
    REQUIRE(dec.has_value());
    CHECK(dec->components.size() == 2);
  }
}

TEST_CASE("component bound is reported, not exceeded silently") {
  Certificate c = irreducibility_verdict(lines_tower(), 6, 4, 3);
  CHECK(c.verdict == Verdict::Inconclusive);
  bool mentions_bound = false;
  for (const auto& e : c.evidence)
    mentions_bound |= e.find("bound") != std::string::npos ||
                      e.find("decomposition") != std::string::npos;
  CHECK(mentions_bound);
}

TEST_CASE("rational root extraction") {
  Polynomial p = (X(1) - C(1)) * (X(1) - C(2)) * (C(2) * X(1) - C(1));
  auto roots = rational_roots(p, 1);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == mpq_class(1, 2));
  CHECK(roots[1] == 1);
  CHECK(roots[2] == 2);
  auto none = rational_roots(X(1) * X(1) + C(1), 1);
  CHECK(none.empty());
}
