#include <benchmark/benchmark.h>

#include "crystal_poly/inequality_engine.hpp"
#include "crystal_poly/oracle.hpp"
#include "crystal_poly/shapes.hpp"

using namespace crystal_poly;

namespace {

Family family_arg(int64_t i) {
  static const Family all[] = {Family::A1, Family::A2, Family::C1, Family::D2};
  return all[i];
}

void BM_ImageClosure(benchmark::State& state) {
  Context c({family_arg(state.range(0)), 3}, {2, 1, 3});
  Crystal cr(c, WeightSpec::inf(3));
  for (auto _ : state) benchmark::DoNotOptimize(generate_image(cr, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_ImageClosure)->ArgsProduct({{0, 1, 2, 3}, {4, 6}})->Unit(benchmark::kMillisecond);

void BM_SPrimeClosure(benchmark::State& state) {
  Context c({family_arg(state.range(0)), 3}, {2, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(generate_xi_infinity(c, 3 * static_cast<int>(state.range(1))));
}
BENCHMARK(BM_SPrimeClosure)->ArgsProduct({{0, 1, 2, 3}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_CombInfinity(benchmark::State& state) {
  Context c({family_arg(state.range(0)), 3}, {2, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(comb_infinity(c, 3 * static_cast<int>(state.range(1))));
}
BENCHMARK(BM_CombInfinity)->ArgsProduct({{0, 1, 2, 3}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_EpsilonStar(benchmark::State& state) {
  Context c({Family::A1, 3}, {2, 1, 3});
  ZVector x({3, 3, 2, 3, 2, 1});
  const bool oracle = state.range(0) == 1;
  for (auto _ : state)
    for (int k = 1; k <= 3; ++k)
      benchmark::DoNotOptimize(oracle ? epsilon_star_oracle(c, x, k) : epsilon_star_forms(c, x, k));
}
BENCHMARK(BM_EpsilonStar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Crosscheck(benchmark::State& state) {
  Context c({family_arg(state.range(0)), 3}, {2, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(crosscheck_membership(c, WeightSpec::fundamental(3, 1), 4));
}
BENCHMARK(BM_Crosscheck)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
