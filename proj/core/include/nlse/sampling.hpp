#pragma once

#include <cstdint>
#include <random>

#include "nlse/coefficients.hpp"

namespace nlse {

using Rng = std::mt19937_64;

/// Controls for randomly drawn group elements and coefficient vectors, used
/// by the property suites. Windows default to [0,1].
struct SamplingOptions {
    double t0 = 0.0;
    double t1 = 1.0;
    double gamma_bound = 5.0;   ///< |γ(t)| stays below this on the window
    double lambda_min = 0.1;    ///< Λ(t) range [lambda_min, lambda_max]
    double lambda_max = 10.0;
    bool allow_tabulated = true;
};

/// Random TimeFn of any kind, bounded by `bound` in magnitude on the window.
TimeFn random_timefn(Rng& rng, const SamplingOptions& opts, double bound);
/// Random strictly positive TimeFn with values in [lo, hi] on the window.
TimeFn random_positive_timefn(Rng& rng, const SamplingOptions& opts, double lo, double hi);
/// Random pure nonlinear element (θ ≡ 0) with the option's γ/Λ bounds;
/// Λ carries a random overall sign when negative_lambda is set.
GaugeElement random_gauge_element(Rng& rng, const SamplingOptions& opts,
                                  bool negative_lambda = false);
/// Random coefficient vector with ν₁ bounded away from zero.
CoefficientVector random_coefficients(Rng& rng, const SamplingOptions& opts);

} // namespace nlse
