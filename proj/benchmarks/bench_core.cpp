#include <benchmark/benchmark.h>

#include "equigen/conditions.hpp"
#include "equigen/expansion.hpp"
#include "equigen/groebner.hpp"
#include "equigen/lift_solver.hpp"

using namespace equigen;

static void BM_BigF(benchmark::State& state) {
  const auto model = expansion::LocalModel::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    for (int n = 1; n < model.a; ++n) benchmark::DoNotOptimize(expansion::bigF(model, n));
  }
}
BENCHMARK(BM_BigF)->Args({4, 6})->Args({5, 8})->Args({6, 11});

static void BM_JacBar(benchmark::State& state) {
  const auto model = expansion::LocalModel::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(expansion::jacBar(model));
}
BENCHMARK(BM_JacBar)->Args({4, 6})->Args({5, 8});

static void BM_CheckG(benchmark::State& state) {
  const auto model = groebner::LocalModel::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(groebner::checkG(model, groebner::Budget{120.0}));
}
BENCHMARK(BM_CheckG)->Args({4, 6})->Args({4, 7})->Args({5, 6})->Unit(benchmark::kMillisecond);

static void BM_LiftRun(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  const auto model = lifting::LocalModel::make(a, b);
  const std::vector<Rational> witness(a - 1, Rational(1));
  const lifting::LiftProblem problem(model, witness, b + 1 + static_cast<int>(state.range(2)), 1, lifting::zeroProvider());
  for (auto _ : state) benchmark::DoNotOptimize(lifting::liftRun(problem));
}
BENCHMARK(BM_LiftRun)->Args({2, 3, 6})->Args({4, 6, 6})->Args({4, 6, 12})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
