#include <benchmark/benchmark.h>

#include "krein/induced.hpp"

using namespace krein;

static void BM_CounterexampleDefect(benchmark::State& state) {
  const CounterexampleInstance inst = counterexample_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_defect(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CounterexampleDefect)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_Induce(benchmark::State& state) {
  const CounterexampleInstance inst = counterexample_instance(static_cast<int>(state.range(0)));
  const Operator a = Operator::on(inst.H, inst.A);
  for (auto _ : state) {
    InducedKreinSpace ind = induce(a);
    benchmark::DoNotOptimize(ind.Pi.data());
  }
}
BENCHMARK(BM_Induce)->Arg(8)->Arg(32);
