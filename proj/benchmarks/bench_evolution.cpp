#include <benchmark/benchmark.h>

#include "nlse/evolution.hpp"
#include "nlse/presets.hpp"

namespace {

void RhsLinear(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const nlse::GridSpec g(n, 20.0);
    const nlse::WaveFunction psi = nlse::gaussian_packet(g, 0.0, 1.0, 0.9).normalized();
    const nlse::CoefficientVector c = nlse::preset(nlse::PresetName::Linear);
    const nlse::Potential v = nlse::Potential::harmonic(1.0);
    for (auto _ : state) {
        auto out = nlse::rhs(psi, 0.0, c, v);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(RhsLinear)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

void RhsDiffusive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const nlse::GridSpec g(n, 20.0);
    const nlse::WaveFunction psi = nlse::gaussian_packet(g, 0.0, 1.0, 0.9).normalized();
    nlse::PresetParams p;
    p.D = 0.05;
    const nlse::CoefficientVector c = nlse::preset(nlse::PresetName::DG, p);
    const nlse::Potential v = nlse::Potential::zero();
    for (auto _ : state) {
        auto out = nlse::rhs(psi, 0.0, c, v);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(RhsDiffusive)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

void FreePacketRun(benchmark::State& state) {
    const nlse::GridSpec g(256, 20.0);
    nlse::EvolutionSpec spec;
    spec.grid = g;
    spec.coefficients = nlse::preset(nlse::PresetName::Linear);
    spec.t1 = 0.1;
    spec.sample_stride = 1000000;
    const nlse::WaveFunction psi0 = nlse::gaussian_packet(g, 0.0, 1.0, 0.9).normalized();
    for (auto _ : state) {
        auto rec = nlse::run(spec, psi0);
        benchmark::DoNotOptimize(rec.samples.data());
    }
}
BENCHMARK(FreePacketRun)->Unit(benchmark::kMillisecond);

} // namespace
