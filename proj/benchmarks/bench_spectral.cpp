#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "nlse/spectral.hpp"
#include "nlse/wavefunction.hpp"

namespace {

std::vector<nlse::cplx> test_field(int n) {
    const nlse::GridSpec g(n, 20.0);
    return nlse::gaussian_packet(g, 0.0, 1.0, 0.9).values();
}

void FftRoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<nlse::cplx> v = test_field(n);
    for (auto _ : state) {
        nlse::spectral::fft(v, false);
        nlse::spectral::fft(v, true);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(FftRoundTrip)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void SpectralDerivatives(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const nlse::GridSpec g(n, 20.0);
    const std::vector<nlse::cplx> v = test_field(n);
    std::vector<nlse::cplx> d1, d2;
    for (auto _ : state) {
        nlse::spectral::derivatives_1_2(g, v, d1, d2);
        benchmark::DoNotOptimize(d2.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(SpectralDerivatives)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void FunctionalAssembly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const nlse::GridSpec g(n, 20.0);
    const nlse::WaveFunction psi = nlse::gaussian_packet(g, 0.0, 1.0, 0.9).normalized();
    for (auto _ : state) {
        auto d = nlse::functionals(psi);
        benchmark::DoNotOptimize(d.r5.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(FunctionalAssembly)->RangeMultiplier(2)->Range(256, 2048)->Complexity();

} // namespace
