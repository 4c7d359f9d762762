#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rectlift/dimension.hpp"
#include "rectlift/lift.hpp"
#include "rectlift/nabla.hpp"
#include "rectlift/perm.hpp"
#include "rectlift/polytope.hpp"
#include "rectlift/verify.hpp"

using namespace rectlift;

static void BM_CensusRectangular(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(n, PermClass::rectangular));
}
BENCHMARK(BM_CensusRectangular)->Arg(6)->Arg(7)->Arg(8);

static void BM_CensusTriangular(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(n, PermClass::triangular));
}
BENCHMARK(BM_CensusTriangular)->Arg(6)->Arg(7)->Arg(8);

static void BM_DemazureDim(benchmark::State& state) {
  Permutation tau({4, 3, 2, 5, 1});
  Weight lambda({2, 1, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(demazure_dim(tau, lambda));
}
BENCHMARK(BM_DemazureDim);

static void BM_WeylCharacterDim(benchmark::State& state) {
  Permutation longest({6, 5, 4, 3, 2, 1});
  Weight lambda({2, 2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(demazure_dim(longest, lambda));
}
BENCHMARK(BM_WeylCharacterDim);

static void BM_PolytopeCount(benchmark::State& state) {
  Permutation tau({4, 3, 2, 5, 1});
  Weight lambda({2, 1, 2, 1});
  RootSubset support = inversion_set(tau);
  for (auto _ : state) benchmark::DoNotOptimize(polytope_count(support, lambda));
}
BENCHMARK(BM_PolytopeCount);

static void BM_TauFromIdeal(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  NablaIdeal a = NablaIdeal::full(n);
  for (auto _ : state) benchmark::DoNotOptimize(tau_A(a));
}
BENCHMARK(BM_TauFromIdeal)->Arg(8)->Arg(16);

static void BM_ClosedFormInverse(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  NablaIdeal a = NablaIdeal::full(n);
  RootSubset region = nabla(n);
  for (auto _ : state)
    for (const PosRoot& x : region) benchmark::DoNotOptimize(tau_inv_on_nabla(a, x));
}
BENCHMARK(BM_ClosedFormInverse)->Arg(8)->Arg(16);

static void BM_VerifyLift(benchmark::State& state) {
  Permutation tau({4, 3, 2, 5, 1});
  Weight lambda({1, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(verify_lift(tau, lambda).pass());
}
BENCHMARK(BM_VerifyLift);

BENCHMARK_MAIN();
