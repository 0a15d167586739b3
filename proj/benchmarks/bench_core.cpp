#include <benchmark/benchmark.h>

#include "qtvsim/evolution.hpp"
#include "qtvsim/killweb.hpp"
#include "qtvsim/linalg.hpp"
#include "qtvsim/random.hpp"

using namespace qtvsim;

static void BM_GaussianState(benchmark::State& state) {
  RandomStream stream(7, 0);
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian_state(dim, stream));
  }
}
BENCHMARK(BM_GaussianState)->Arg(10)->Arg(100);

static void BM_HaarUnitary(benchmark::State& state) {
  RandomStream stream(7, 0);
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(haar_unitary(dim, stream));
  }
}
BENCHMARK(BM_HaarUnitary)->Arg(10)->Arg(32);

static void BM_EigHermitian(benchmark::State& state) {
  RandomStream stream(7, 0);
  const int dim = static_cast<int>(state.range(0));
  ComplexMatrix a(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      a(i, j) = Complex(stream.next_gaussian(), stream.next_gaussian());
    }
  }
  ComplexMatrix h = (a + a.adjoint()) / 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian(h));
  }
}
BENCHMARK(BM_EigHermitian)->Arg(10)->Arg(32);

static void BM_PartialTrace(benchmark::State& state) {
  RandomStream stream(7, 0);
  const int n = static_cast<int>(state.range(0));
  ComplexVector psi = bipartite_state(n, n, stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace_A(psi, n, n));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(16);

static void BM_EvolveStep(benchmark::State& state) {
  RealMatrix mask = killweb_mask();
  RealMatrix h = init_hamiltonian(mask);
  RandomStream stream(7, 0);
  StateProvider provider = random_bipartite_provider(10, 1, stream);
  StateSample sample = provider(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(h, mask, sample.update, 0.7, 0.7));
  }
}
BENCHMARK(BM_EvolveStep);

static void BM_KillwebRun(benchmark::State& state) {
  EvolutionConfig cfg;
  cfg.steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_killweb(cfg));
  }
}
BENCHMARK(BM_KillwebRun)->Arg(100);

BENCHMARK_MAIN();
