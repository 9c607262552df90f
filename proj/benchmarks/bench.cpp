#include <benchmark/benchmark.h>

#include "optchan/device.hpp"
#include "optchan/gates.hpp"
#include "optchan/modes.hpp"
#include "optchan/propagation.hpp"

namespace {

void bm_overlap(benchmark::State& state) {
  const optchan::modes::CavityGeometry geometry{1.0, 200.0, 1.0, 1};
  int s = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optchan::modes::overlap(geometry, s));
    s = s % 800 + 1;
  }
}
BENCHMARK(bm_overlap);

void bm_population_spectrum(benchmark::State& state) {
  const auto geometry = optchan::propagation::default_geometry(
      1, {1.24e-6, 2.2, static_cast<double>(state.range(0))});
  for (auto _ : state)
    benchmark::DoNotOptimize(optchan::modes::population_spectrum(geometry));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_population_spectrum)->Arg(20)->Arg(50)->Arg(100)->Complexity();

void bm_spectral_fidelity(benchmark::State& state) {
  const auto geometry = optchan::propagation::default_geometry(1, {1.24e-6, 2.2, 50.0});
  const auto spectrum = optchan::modes::population_spectrum(geometry);
  const auto params =
      optchan::propagation::DispersionParams::from_ps_nm_km(10.0, geometry);
  for (auto _ : state)
    benchmark::DoNotOptimize(optchan::propagation::roundtrip_fidelity(params, spectrum));
}
BENCHMARK(bm_spectral_fidelity);

void bm_grid_fidelity(benchmark::State& state) {
  const auto geometry = optchan::propagation::default_geometry(1, {1.24e-6, 2.2, 50.0});
  const auto spectrum = optchan::modes::population_spectrum(geometry);
  const auto params =
      optchan::propagation::DispersionParams::from_ps_nm_km(10.0, geometry);
  for (auto _ : state)
    benchmark::DoNotOptimize(optchan::propagation::roundtrip_fidelity(
        params, spectrum, optchan::propagation::FidelityMethod::grid));
}
BENCHMARK(bm_grid_fidelity);

void bm_reflectivity(benchmark::State& state) {
  const auto stack = optchan::device::GratingSpec::quarter_wave(
      2.22, 2.18, 1.24e-6, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(optchan::device::reflectivity_at(stack, 1.2405e-6, 2.2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_reflectivity)->Arg(200)->Arg(1000)->Arg(3000)->Complexity();

void bm_cnot_protocol(benchmark::State& state) {
  const auto protocols = optchan::gates::builtin_protocols();
  const auto& script = protocols.at("cnot");
  const auto input = optchan::gates::computational_encode(1, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(optchan::gates::run_protocol(script, input));
}
BENCHMARK(bm_cnot_protocol);

}  // namespace

BENCHMARK_MAIN();
