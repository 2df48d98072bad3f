#include <benchmark/benchmark.h>

#include "krein/kolmogorov.hpp"
#include "krein/random.hpp"

using namespace krein;

static void BM_BuildKolmogorov(benchmark::State& state) {
  Rng rng(1);
  const Index n = state.range(0);
  const Index dim = state.range(1);
  const KreinSpace h = rng.krein_space(dim);
  const HermitianKernel k = rng.hermitian_kernel(h, n);
  for (auto _ : state) {
    KolmogorovDecomposition dec = build_kolmogorov(k);
    benchmark::DoNotOptimize(dec.V.data());
  }
  state.SetComplexityN(n * dim);
}
BENCHMARK(BM_BuildKolmogorov)
    ->Args({4, 2})
    ->Args({8, 2})
    ->Args({8, 4})
    ->Args({16, 4})
    ->Complexity();

static void BM_ReconstructResidual(benchmark::State& state) {
  Rng rng(2);
  const KreinSpace h = rng.krein_space(state.range(0));
  const HermitianKernel k = rng.hermitian_kernel(h, 8);
  const KolmogorovDecomposition dec = build_kolmogorov(k);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_residual(dec, k));
}
BENCHMARK(BM_ReconstructResidual)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
