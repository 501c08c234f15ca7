#include "hhc/coderivation.hpp"
#include "hhc/hochschild.hpp"
#include "hhc/resolutions.hpp"

#include <benchmark/benchmark.h>

using namespace hhc;

namespace {

Preset preset(int n, int window) { return xn_resolution(Field::rationals(), n, window); }

void BM_LiftCocycle(benchmark::State& state) {
  Preset p = preset(3, 8);
  Map f = hh_basis(p.P, 1).reps.back();
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lift_cocycle(p.S, f, depth));
}
BENCHMARK(BM_LiftCocycle)->DenseRange(2, 5);

void BM_Bracket(benchmark::State& state) {
  Preset p = preset(static_cast<int>(state.range(0)), 8);
  Map f = hh_basis(p.P, 1).reps.back(), g = hh_basis(p.P, 2).reps.back();
  for (auto _ : state) benchmark::DoNotOptimize(gb_bracket(p.S, f, g));
}
BENCHMARK(BM_Bracket)->Arg(2)->Arg(3)->Arg(4);

void BM_ConstructDelta(benchmark::State& state) {
  Preset p = preset(3, 8);
  int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_delta(p.P, max_n));
}
BENCHMARK(BM_ConstructDelta)->DenseRange(2, 4);

void BM_BarHH(benchmark::State& state) {
  auto A = std::make_shared<const Algebra>(truncated_polynomial_algebra(Field::rationals(), 3));
  ComplexPtr bar = bar_resolution(A, 4);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hh_basis(bar, n));
}
BENCHMARK(BM_BarHH)->DenseRange(0, 3);

void BM_Circ(benchmark::State& state) {
  Preset p = preset(3, 8);
  Tuple a = lift_cocycle(p.S, hh_basis(p.P, 1).reps.back(), 4);
  Tuple b = lift_cocycle(p.S, hh_basis(p.P, 2).reps.back(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(circ(a, b, 4));
}
BENCHMARK(BM_Circ);

}  // namespace

BENCHMARK_MAIN();
