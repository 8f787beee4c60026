#include "nlse/verification.hpp"

#include <chrono>
#include <cmath>

#include "nlse/invariants.hpp"

namespace nlse {

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::array<double, 5> sample_times(const SamplingOptions& opts) {
    std::array<double, 5> ts{};
    for (int i = 0; i < 5; ++i)
        ts[static_cast<size_t>(i)] = opts.t0 + (opts.t1 - opts.t0) * i / 4.0;
    return ts;
}

double element_distance(const GaugeElement& a, const GaugeElement& b, double t) {
    return std::max(std::abs(a.gamma().value(t) - b.gamma().value(t)),
                    std::abs(a.lambda().value(t) - b.lambda().value(t)));
}

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            m[i][j] = s;
        }
    return m;
}

double mat_distance(const Mat3& a, const Mat3& b) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d;
}

} // namespace

AlgebraSuiteReport verify_algebra(std::uint64_t seed, int triples,
                                  const SamplingOptions& opts) {
    Rng rng(seed);
    AlgebraSuiteReport rep;
    rep.triples = triples;
    const auto ts = sample_times(opts);
    const GaugeElement id = GaugeElement::identity();
    const double start = now_seconds();

    for (int n = 0; n < triples; ++n) {
        const GaugeElement a = random_gauge_element(rng, opts, true);
        const GaugeElement b = random_gauge_element(rng, opts, true);
        const GaugeElement c = random_gauge_element(rng, opts, true);

        const GaugeElement ab_c = compose(compose(a, b), c);
        const GaugeElement a_bc = compose(a, compose(b, c));
        const GaugeElement a_ainv = compose(a, inverse(a));
        const GaugeElement ainv_a = compose(inverse(a), a);
        const GaugeElement ab = compose(a, b);

        for (double t : ts) {
            rep.max_associativity_err =
                std::max(rep.max_associativity_err, element_distance(ab_c, a_bc, t));
            rep.max_inverse_err =
                std::max({rep.max_inverse_err, element_distance(a_ainv, id, t),
                          element_distance(ainv_a, id, t)});
            rep.max_matrix_hom_err = std::max(
                rep.max_matrix_hom_err,
                mat_distance(matrix_rep(ab, t), mat_mul(matrix_rep(a, t), matrix_rep(b, t))));
        }
    }
    rep.elapsed_seconds = now_seconds() - start;
    return rep;
}

InvarianceSuiteReport verify_invariance(std::uint64_t seed, int pairs,
                                        const SamplingOptions& opts) {
    Rng rng(seed);
    InvarianceSuiteReport rep;
    rep.pairs = pairs;
    const auto ts = sample_times(opts);
    const double start = now_seconds();

    for (int n = 0; n < pairs; ++n) {
        const CoefficientVector c = random_coefficients(rng, opts);
        const GaugeElement g = random_gauge_element(rng, opts, true);
        const InvariantVector before = invariants(c);
        const InvariantVector after = invariants(act_on_coefficients(g, c));
        for (double t : ts) {
            const auto vb = before.values(t);
            const auto va = after.values(t);
            for (size_t k = 0; k < 8; ++k) {
                const double denom = std::max({std::abs(vb[k]), std::abs(va[k]), 1e-6});
                rep.max_relative_err =
                    std::max(rep.max_relative_err, std::abs(va[k] - vb[k]) / denom);
            }
        }
    }
    rep.elapsed_seconds = now_seconds() - start;
    return rep;
}

OrbitRankReport orbit_jacobian_rank(const CoefficientVector& c, double gamma, double lambda,
                                    double t) {
    // Central differences of the 8-component linear action with respect to
    // the two group parameters.
    const auto acted = [&](double g, double l) {
        const GaugeElement e(TimeFn::constant(g), TimeFn::constant(l));
        const CoefficientVector r = act_on_coefficients(e, c);
        return std::array<double, 8>{r.nu1.value(t), r.nu2.value(t), r.mu0.value(t),
                                     r.mu1.value(t), r.mu2.value(t), r.mu3.value(t),
                                     r.mu4.value(t), r.mu5.value(t)};
    };
    const double h = 1e-5;
    const auto gp = acted(gamma + h, lambda), gm = acted(gamma - h, lambda);
    const auto lp = acted(gamma, lambda + h), lm = acted(gamma, lambda - h);

    // Singular values of the 8x2 Jacobian via the 2x2 Gram matrix.
    double a = 0.0, b = 0.0, d = 0.0;
    for (size_t i = 0; i < 8; ++i) {
        const double j1 = (gp[i] - gm[i]) / (2.0 * h);
        const double j2 = (lp[i] - lm[i]) / (2.0 * h);
        a += j1 * j1;
        b += j1 * j2;
        d += j2 * j2;
    }
    const double tr = a + d;
    const double det = a * d - b * b;
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    OrbitRankReport rep;
    rep.sigma1 = std::sqrt(std::max(0.0, tr / 2.0 + disc));
    rep.sigma2 = std::sqrt(std::max(0.0, tr / 2.0 - disc));
    return rep;
}

} // namespace nlse
