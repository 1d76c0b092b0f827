#include <benchmark/benchmark.h>

#include "kgbound/oracle.hpp"
#include "kgbound/spectrum.hpp"
#include "kgbound/thermo.hpp"
#include "kgbound/wavefunction.hpp"

using namespace kgb;

static void BM_SolveEnergy(benchmark::State& state) {
  const auto p = reference_params(0.15);
  const auto ctx = PhysicalContext::natural();
  const auto qn = QuantumNumbers::make(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_energy(p, ctx, qn).energy);
}
BENCHMARK(BM_SolveEnergy)->Arg(0)->Arg(2);

static void BM_RadialChi(benchmark::State& state) {
  const auto st = solve_energy(reference_params(0.1), PhysicalContext::natural(), QuantumNumbers::make(2, 1));
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_chi(st, r));
    r = r < 30.0 ? r + 0.37 : 0.1;
  }
}
BENCHMARK(BM_RadialChi);

static void BM_PartitionPoisson(benchmark::State& state) {
  const auto s = make_nonrel_spectrum(reference_params(0.15), PhysicalContext::natural(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(partition_poisson(s, 1.3));
}
BENCHMARK(BM_PartitionPoisson);

static void BM_ThermoPoint(benchmark::State& state) {
  const auto s = make_nonrel_spectrum(reference_params(0.15), PhysicalContext::natural(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(thermo_point(s, 1.3).c);
}
BENCHMARK(BM_ThermoPoint);

static void BM_NumericEigenvalue(benchmark::State& state) {
  const auto p = reference_params(0.1);
  const auto ctx = PhysicalContext::natural();
  const auto cfg = ShootingConfig::for_delta(0.1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_eigenvalue(p, ctx, QuantumNumbers::make(1, 0), cfg).energy);
  }
}
BENCHMARK(BM_NumericEigenvalue)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
