#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "sfc/controller.hpp"
#include "sfc/describing.hpp"
#include "sfc/presets.hpp"
#include "sfc/sim.hpp"
#include "sfc/spectrum.hpp"

namespace {

void BM_StepDiscreteSfc(benchmark::State& state) {
    const sfc::ControllerParams p = sfc::find_preset("fixed_sfc").params;
    sfc::ControllerState s;
    for (auto _ : state) {
        s = sfc::step_discrete(p, s, 5.0, 0.002);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_StepDiscreteSfc);

void BM_Psi(benchmark::State& state) {
    double n = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfc::psi(n));
        n = n < 100.0 ? n + 0.37 : 1.0;
    }
}
BENCHMARK(BM_Psi);

void BM_RunImpulseProfile(benchmark::State& state) {
    sfc::SimConfig c;
    c.controller = sfc::find_preset("fixed_sfc").params;
    c.input = sfc::InputSignal::traction_with_impact();
    c.dt = 0.002;
    c.duration = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sfc::run(c));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sfc::sample_count(c)));
}
BENCHMARK(BM_RunImpulseProfile)->Arg(2)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_MeasureGain(benchmark::State& state) {
    const sfc::SfcParams p{1.0, 1.0, 3.0, 1.0};
    const sfc::SimConfig c = sfc::sine_config(p, 10.0, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sfc::measure_gain(c));
}
BENCHMARK(BM_MeasureGain)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BandEnergy(benchmark::State& state) {
    std::vector<double> x(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(0.01 * static_cast<double>(i)) + 0.1 * std::sin(0.7 * static_cast<double>(i));
    for (auto _ : state) benchmark::DoNotOptimize(sfc::band_energy(x, 0.001, 6.28, 500.0));
}
BENCHMARK(BM_BandEnergy)->Arg(1000)->Arg(1 << 14)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
