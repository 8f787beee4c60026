#include <benchmark/benchmark.h>

#include "nlse/invariants.hpp"
#include "nlse/sampling.hpp"

namespace {

void ComposeAndEvaluate(benchmark::State& state) {
    nlse::Rng rng(7);
    nlse::SamplingOptions opts;
    const nlse::GaugeElement a = random_gauge_element(rng, opts);
    const nlse::GaugeElement b = random_gauge_element(rng, opts);
    double t = 0.0;
    for (auto _ : state) {
        const nlse::GaugeElement c = compose(a, b);
        t += 1e-6;
        if (t > 1.0) t = 0.0;
        benchmark::DoNotOptimize(c.gamma().value(t) + c.lambda().value(t));
    }
}
BENCHMARK(ComposeAndEvaluate);

void CoefficientAction(benchmark::State& state) {
    nlse::Rng rng(11);
    nlse::SamplingOptions opts;
    const nlse::CoefficientVector c = random_coefficients(rng, opts);
    const nlse::GaugeElement g = random_gauge_element(rng, opts);
    for (auto _ : state) {
        const nlse::CoefficientVector acted = act_on_coefficients(g, c);
        benchmark::DoNotOptimize(acted.mu5.value(0.5));
    }
}
BENCHMARK(CoefficientAction);

void InvariantEvaluation(benchmark::State& state) {
    nlse::Rng rng(13);
    nlse::SamplingOptions opts;
    const nlse::CoefficientVector c = random_coefficients(rng, opts);
    const nlse::InvariantVector iv = invariants(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iv.values(0.3));
    }
}
BENCHMARK(InvariantEvaluation);

} // namespace
