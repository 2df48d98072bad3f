#include <benchmark/benchmark.h>

#include "krein/random.hpp"
#include "krein/weyl.hpp"

using namespace krein;

static void BM_TruncatedFock(benchmark::State& state) {
  const KreinSpace h = KreinSpace::diag_signature(state.range(0) - 1, 1);
  for (auto _ : state) {
    TruncatedFock fock = TruncatedFock::make(h, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(fock.JF.data());
  }
}
BENCHMARK(BM_TruncatedFock)->Args({2, 8})->Args({2, 12})->Args({3, 8});

static void BM_FockPairing(benchmark::State& state) {
  Rng rng(3);
  const KreinSpace h = KreinSpace::diag_signature(1, 1);
  const TruncatedFock fock = TruncatedFock::make(h, static_cast<int>(state.range(0)));
  const Vector xi = rng.vector(2), eta = rng.vector(2);
  const Vector vx = v_vector(fock, xi), ve = v_vector(fock, eta);
  for (auto _ : state) benchmark::DoNotOptimize(fock_pair(fock, vx, ve));
}
BENCHMARK(BM_FockPairing)->Arg(8)->Arg(16)->Arg(20);

static void BM_WeylApply(benchmark::State& state) {
  Rng rng(4);
  const KreinSpace h = KreinSpace::diag_signature(1, 1);
  ExpLabelCombo combo;
  for (int i = 0; i < state.range(0); ++i) combo.add(rng.scalar(), rng.vector(2));
  const Vector xi = rng.vector(2);
  for (auto _ : state) {
    ExpLabelCombo out = weyl_apply(h, xi, combo);
    benchmark::DoNotOptimize(out.terms.data());
  }
}
BENCHMARK(BM_WeylApply)->Arg(4)->Arg(32);
