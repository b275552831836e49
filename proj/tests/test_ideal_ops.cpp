#include <doctest.h>
#include <set>

#include "indvar/modp.hpp"
#include "test_support.hpp"

using namespace ts;

namespace {

constexpr std::uint64_t kP = 101;

bool vanishes_on_all(const Polynomial& f,
                     const std::vector<std::vector<std::uint64_t>>& points) {
  modp::ReducedPoly rf = modp::reduce(f, kP);
  for (const auto& p : points)
    if (rf.eval(p) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("membership implies vanishing on the F_101 points") {
  std::mt19937_64 rng(31);
  for (const auto& [name, ideal] : catalog_ideals()) {
    if (ideal.ambient() > 2) continue;  // ambient-3 instances run in acceptance
    auto points = modp::variety_points(ideal, kP);
    for (int trial = 0; trial < 5; ++trial) {
      // A guaranteed member: a random combination of the generators.
      Polynomial member;
      for (const auto& g : ideal.generators())
        member += random_poly(rng, ideal.ambient(), 3, 2) * g;
      REQUIRE(ideal.contains(member));
      CHECK_MESSAGE(vanishes_on_all(member, points), name);
    }
  }
}

TEST_CASE("known non-members admit nonvanishing points") {
  auto f = top_rule();
  auto g2 = irred2_rule()->at(2);

  Ideal axis_pts({g2, X(2)}, 2);
  REQUIRE_FALSE(axis_pts.contains(X(1) - C(3)));
  auto pts = modp::variety_points(axis_pts, kP);
  REQUIRE(pts.size() == 2);  // exactly e1 and 2e1
  bool nonzero_somewhere = false;
  modp::ReducedPoly r = modp::reduce(X(1) - C(3), kP);
  for (const auto& p : pts) nonzero_somewhere |= r.eval(p) != 0;
  CHECK(nonzero_somewhere);

  Ideal f2({f->at(2)}, 2);
  REQUIRE_FALSE(f2.contains(X(1)));
  auto pts2 = modp::variety_points(f2, kP);
  bool hit = false;
  modp::ReducedPoly rx = modp::reduce(X(1), kP);
  for (const auto& p : pts2) hit |= rx.eval(p) != 0;
  CHECK(hit);
}

TEST_CASE("intersection matches the pointwise union over F_101") {
  auto g2 = irred2_rule()->at(2);
  std::vector<std::pair<Ideal, Ideal>> pairs = {
      {Ideal({g2}, 2), Ideal({X(2)}, 2)},
      {Ideal({X(1)}, 2), Ideal({X(2)}, 2)},
      {Ideal({top_rule()->at(2)}, 2), Ideal({sum_rule()->at(2)}, 2)},
  };
  for (const auto& [I, J] : pairs) {
    Ideal meet = groebner::intersect(I, J);
    auto pi = modp::variety_points(I, kP);
    auto pj = modp::variety_points(J, kP);
    auto pm = modp::variety_points(meet, kP);
    std::set<std::vector<std::uint64_t>> expected(pi.begin(), pi.end());
    expected.insert(pj.begin(), pj.end());
    std::set<std::vector<std::uint64_t>> got(pm.begin(), pm.end());
    CHECK(got == expected);
  }
}

TEST_CASE("elimination contains the coordinate projection over F_101") {
  Ideal cusp_graph({X(1) - X(3) * X(3), X(2) - X(3) * X(3) * X(3)}, 3);
  Ideal image = groebner::eliminate(cusp_graph, {3});
  auto graph_pts = modp::variety_points(cusp_graph, kP);
  std::set<std::vector<std::uint64_t>> projected;
  for (const auto& p : graph_pts) projected.insert({p[0], p[1]});
  // Projection lands inside the eliminated variety ...
  for (const auto& q : projected) {
    for (const auto& g : image.generators()) {
      modp::ReducedPoly rg = modp::reduce(g, kP);
      CHECK(rg.eval({q[0], q[1]}) == 0);
    }
  }
  // ... and for the cusp parametrization it is exactly the plane curve.
  Ideal curve({X(2) * X(2) - X(1) * X(1) * X(1)}, 2);
  auto curve_pts = modp::variety_points(curve, kP);
  std::set<std::vector<std::uint64_t>> curve_set(curve_pts.begin(), curve_pts.end());
  CHECK(curve_set == projected);
}

TEST_CASE("saturation sits between difference and superset over F_101") {
  Ideal I({X(1) * X(1) * X(2)}, 2);
  Ideal J({X(1)}, 2);
  Ideal S = groebner::saturate(I, J);
  auto pi = modp::variety_points(I, kP);
  auto pjs = modp::variety_points(J, kP);
  auto ps = modp::variety_points(S, kP);
  std::set<std::vector<std::uint64_t>> vi(pi.begin(), pi.end());
  std::set<std::vector<std::uint64_t>> vj(pjs.begin(), pjs.end());
  std::set<std::vector<std::uint64_t>> vs(ps.begin(), ps.end());
  // V(I) \ V(J) inside V(S) inside V(I)
  for (const auto& p : vi)
    if (!vj.count(p)) CHECK(vs.count(p));
  for (const auto& p : vs) CHECK(vi.count(p));
}

TEST_CASE("mod-p reduction rejects bad denominators") {
  Polynomial f = Polynomial::rational(1, 101) * X(1);
  CHECK_THROWS_AS(modp::reduce(f, 101), std::invalid_argument);
}
