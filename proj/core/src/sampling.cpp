#include "nlse/sampling.hpp"

#include <cmath>

namespace nlse {

namespace {

std::vector<double> smooth_table(Rng& rng, double lo, double hi, int points) {
    // Low-order trigonometric polynomial sampled on the window, mapped into
    // [lo, hi]; smooth enough that finite-difference derivatives behave.
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double a0 = u(rng), a1 = u(rng), a2 = u(rng), p1 = u(rng), p2 = u(rng);
    std::vector<double> v(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double s = static_cast<double>(i) / (points - 1);
        const double raw =
            a0 + a1 * std::sin(2.0 * s + p1) + a2 * std::cos(4.0 * s + p2); // in [-3,3]
        v[static_cast<size_t>(i)] = lo + (hi - lo) * (raw + 3.0) / 6.0;
    }
    return v;
}

} // namespace

TimeFn random_timefn(Rng& rng, const SamplingOptions& opts, double bound) {
    std::uniform_int_distribution<int> kind(0, opts.allow_tabulated ? 3 : 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    switch (kind(rng)) {
        case 0:
            return TimeFn::constant(bound * u(rng));
        case 1: {
            // slope*t + intercept bounded over [t0, t1]
            const double intercept = 0.5 * bound * u(rng);
            const double tmax = std::max(std::abs(opts.t0), std::abs(opts.t1));
            const double slope = tmax > 0.0 ? 0.5 * bound * u(rng) / tmax : 0.5 * bound * u(rng);
            return TimeFn::linear(slope, intercept);
        }
        case 2: {
            const double rate = u(rng);
            const double tref = rate > 0.0 ? opts.t1 : opts.t0;
            const double amplitude = bound * u(rng) * std::exp(-rate * tref);
            return TimeFn::exponential(amplitude, rate);
        }
        default: {
            const int points = 17;
            auto v = smooth_table(rng, -bound, bound, points);
            return TimeFn::tabulated(opts.t0, (opts.t1 - opts.t0) / (points - 1), std::move(v));
        }
    }
}

TimeFn random_positive_timefn(Rng& rng, const SamplingOptions& opts, double lo, double hi) {
    std::uniform_int_distribution<int> kind(0, opts.allow_tabulated ? 3 : 2);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    switch (kind(rng)) {
        case 0:
            return TimeFn::constant(lo + (hi - lo) * u01(rng));
        case 1: {
            const double a = lo + (hi - lo) * u01(rng);
            const double b = lo + (hi - lo) * u01(rng);
            const double slope = (b - a) / (opts.t1 - opts.t0);
            return TimeFn::linear(slope, a - slope * opts.t0);
        }
        case 2: {
            const double a = lo + (hi - lo) * u01(rng);
            const double b = lo + (hi - lo) * u01(rng);
            const double rate = std::log(b / a) / (opts.t1 - opts.t0);
            return TimeFn::exponential(a * std::exp(-rate * opts.t0), rate);
        }
        default: {
            const int points = 17;
            auto v = smooth_table(rng, lo, hi, points);
            return TimeFn::tabulated(opts.t0, (opts.t1 - opts.t0) / (points - 1), std::move(v));
        }
    }
}

GaugeElement random_gauge_element(Rng& rng, const SamplingOptions& opts, bool negative_lambda) {
    TimeFn gamma = random_timefn(rng, opts, opts.gamma_bound);
    TimeFn lambda = random_positive_timefn(rng, opts, opts.lambda_min, opts.lambda_max);
    if (negative_lambda && std::uniform_int_distribution<int>(0, 1)(rng) == 1)
        lambda = -1.0 * lambda;
    return GaugeElement(std::move(gamma), std::move(lambda));
}

CoefficientVector random_coefficients(Rng& rng, const SamplingOptions& opts) {
    CoefficientVector c;
    std::uniform_int_distribution<int> sign(0, 1);
    // nu1 bounded away from zero with a fixed sign.
    TimeFn nu1_mag = random_positive_timefn(rng, opts, 0.2, 2.0);
    c.nu1 = sign(rng) ? nu1_mag : -1.0 * nu1_mag;
    c.nu2 = random_timefn(rng, opts, 1.0);
    c.mu0 = random_timefn(rng, opts, 2.0);
    c.mu1 = random_timefn(rng, opts, 2.0);
    c.mu2 = random_timefn(rng, opts, 2.0);
    c.mu3 = random_timefn(rng, opts, 2.0);
    c.mu4 = random_timefn(rng, opts, 2.0);
    c.mu5 = random_timefn(rng, opts, 2.0);
    c.alpha1 = random_timefn(rng, opts, 1.0);
    c.alpha2 = random_timefn(rng, opts, 1.0);
    return c;
}

} // namespace nlse
