#include <benchmark/benchmark.h>

#include "indvar/groebner.hpp"
#include "indvar/rule.hpp"
#include "indvar/topology.hpp"

using namespace indvar;

namespace {

Polynomial X(int i) { return Polynomial::variable(i); }
Polynomial C(long n) { return Polynomial::constant(n); }

std::shared_ptr<GeneratorRule> squaring_rule() {
  auto k = IntExpr::symbol("k");
  auto step = PolyExpr::add(PolyExpr::pow(PolyExpr::self(k), 2),
                            PolyExpr::var(IntExpr::add(k, IntExpr::constant(1))));
  return GeneratorRule::make("f", {{1, X(1)}}, step);
}

std::shared_ptr<GeneratorRule> affine_chain_rule() {
  auto k = IntExpr::symbol("k");
  auto kp1 = IntExpr::add(IntExpr::symbol("k"), IntExpr::constant(1));
  auto step = PolyExpr::sub(
      PolyExpr::mul(PolyExpr::sub(PolyExpr::var(IntExpr::constant(1)),
                                  PolyExpr::index_scalar(kp1)),
                    PolyExpr::self(k)),
      PolyExpr::var(kp1));
  return GeneratorRule::make("g", {{1, X(1) - C(1)}}, step);
}

}  // namespace

static void BM_PolyMulSquaringLevel(benchmark::State& state) {
  auto f = squaring_rule();
  const Polynomial& p = f->at(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(p * p);
  }
}
BENCHMARK(BM_PolyMulSquaringLevel)->Arg(3)->Arg(4)->Arg(5);

static void BM_ReducedBasisCircleLine(benchmark::State& state) {
  std::vector<Polynomial> gens{X(1) - X(2), X(1) * X(1) + X(2) * X(2) - C(1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner::reduced_basis(gens, MonomialOrder::lex()));
  }
}
BENCHMARK(BM_ReducedBasisCircleLine);

static void BM_IntersectCurveWithAxis(benchmark::State& state) {
  auto g = affine_chain_rule();
  const int n = static_cast<int>(state.range(0));
  Ideal A({g->at(n)}, n);
  std::vector<Polynomial> axis;
  for (int j = 2; j <= n; ++j) axis.push_back(X(j));
  Ideal B(axis, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner::intersect(A, B));
  }
}
BENCHMARK(BM_IntersectCurveWithAxis)->Arg(4)->Arg(6);

static void BM_RadicalMembership(benchmark::State& state) {
  auto f = squaring_rule();
  const int n = static_cast<int>(state.range(0));
  Ideal I({f->at(n)}, n);
  Polynomial candidate = f->at(n + 1).restrict_to_level(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(groebner::in_radical(candidate, I));
  }
}
BENCHMARK(BM_RadicalMembership)->Arg(3)->Arg(4);

static void BM_SeparationSearch(benchmark::State& state) {
  Tower A = Tower::affine_space("A");
  auto f = squaring_rule();
  ClosedSetTower Y = ClosedSetTower::principal("Y", A, f);
  for (auto _ : state) {
    SeparationProblem p{Y, {mpq_class(1)}, static_cast<int>(state.range(0)), 4};
    benchmark::DoNotOptimize(separation_witness(p));
  }
}
BENCHMARK(BM_SeparationSearch)->Arg(3)->Arg(4);

static void BM_PowerChainCertificate(benchmark::State& state) {
  auto f = squaring_rule();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        density_certificate_power_chain(*f, static_cast<int>(state.range(0)), 8));
  }
}
BENCHMARK(BM_PowerChainCertificate)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
