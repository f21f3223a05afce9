#include <benchmark/benchmark.h>

#include "minksurf/profiles.hpp"
#include "minksurf/spectral.hpp"
#include "minksurf/surface.hpp"

using namespace minksurf;

static void BM_SolveBoundStates(benchmark::State& state) {
  const RevolutionFamily fam = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  const int n = static_cast<int>(state.range(0));
  const EffectiveProblem1D prob = effective_problem(fam, 4.0, {-60.0, 60.0, n});
  for (auto _ : state) {
    Spectrum spec = solve_bound_states(prob, 8);
    benchmark::DoNotOptimize(spec.eigenvalues.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveBoundStates)->Arg(3001)->Arg(6001)->Arg(12001)->Complexity();

static void BM_ShapeDataAnalytic(benchmark::State& state) {
  const RevolutionFamily fam = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  const SurfaceChart chart = fam.chart();
  int i = 0;
  for (auto _ : state) {
    const double q = (i++ % 2000) * 1e-3;
    benchmark::DoNotOptimize(shape_data(chart, 0.3, q).K);
  }
}
BENCHMARK(BM_ShapeDataAnalytic);

static void BM_ShapeDataFiniteDiff(benchmark::State& state) {
  const RevolutionFamily fam = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  const SurfaceChart chart = fam.chart(false);
  int i = 0;
  for (auto _ : state) {
    const double q = (i++ % 2000) * 1e-3;
    benchmark::DoNotOptimize(shape_data(chart, 0.3, q).K);
  }
}
BENCHMARK(BM_ShapeDataFiniteDiff);

static void BM_PropagateStep(benchmark::State& state) {
  const RevolutionFamily fam = make_builtin_family("two_sheeted_hyperboloid", 1.0);
  const int n = static_cast<int>(state.range(0));
  const EffectiveProblem1D prob = effective_problem(fam, 1.0, {0.0, 30.0, n});
  Wavefunction1D psi = gaussian_packet(prob, 15.0, 2.0, 1.0);
  for (auto _ : state) {
    psi = propagate(prob, psi, 1e-4, 1);
    benchmark::DoNotOptimize(psi.amp.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_PropagateStep)->Arg(2000)->Arg(8000);

static void BM_EffectiveProblemAssembly(benchmark::State& state) {
  const RevolutionFamily fam = make_builtin_family("one_sheeted_hyperboloid", 1.0);
  for (auto _ : state) {
    EffectiveProblem1D prob = effective_problem(fam, 3.0, {-60.0, 60.0, 12001});
    benchmark::DoNotOptimize(prob.V.data());
  }
}
BENCHMARK(BM_EffectiveProblemAssembly);

BENCHMARK_MAIN();
