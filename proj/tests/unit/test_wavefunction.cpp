#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nlse/sampling.hpp"
#include "nlse/spectral.hpp"
#include "nlse/wavefunction.hpp"

using nlse::cplx;
using nlse::GaugeElement;
using nlse::GridSpec;
using nlse::TimeFn;
using nlse::WaveFunction;

namespace {

// Nonvanishing smooth state with nonzero current, bounded modulus.
WaveFunction textured_state(const GridSpec& g, int winding = 0) {
    std::vector<cplx> v(static_cast<size_t>(g.n));
    const double kw = 2.0 * std::numbers::pi / g.length;
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        const double mod = 1.0 + 0.4 * std::cos(kw * x) + 0.2 * std::sin(2.0 * kw * x);
        const double phase = 0.7 * std::sin(kw * x) + winding * kw * x;
        v[static_cast<size_t>(i)] = std::polar(mod, phase);
    }
    return WaveFunction(g, std::move(v)).normalized();
}

} // namespace

TEST_CASE("density and current on reference states") {
    const GridSpec g(256, 20.0);

    SUBCASE("plane wave: rho = 1/L, J = k/L") {
        const int mode = 3;
        const double k = 2.0 * std::numbers::pi * mode / g.length;
        const auto dc = density_current(nlse::plane_wave(g, mode));
        for (int i = 0; i < g.n; ++i) {
            CHECK(dc.rho[static_cast<size_t>(i)] == doctest::Approx(1.0 / g.length).epsilon(1e-12));
            CHECK(dc.current[static_cast<size_t>(i)] ==
                  doctest::Approx(k / g.length).epsilon(1e-10));
        }
    }

    SUBCASE("real gaussian carries no current") {
        const auto dc = density_current(nlse::gaussian_packet(g, 0.0, 1.0, 0.0));
        for (double j : dc.current) CHECK(std::abs(j) < 1e-14);
    }

    SUBCASE("chirped gaussian: J = k rho") {
        const double k = 2.0 * std::numbers::pi * 4 / g.length;
        const auto psi = nlse::gaussian_packet(g, 0.0, 1.0, k);
        const auto dc = density_current(psi);
        for (int i = 0; i < g.n; ++i) {
            if (std::abs(g.x(i)) > 5.0) continue;
            CHECK(dc.current[static_cast<size_t>(i)] ==
                  doctest::Approx(k * dc.rho[static_cast<size_t>(i)]).epsilon(1e-8));
        }
    }
}

TEST_CASE("functionals on reference states") {
    const GridSpec g(512, 40.0);

    SUBCASE("plane wave: R3 = k^2, others vanish") {
        const int mode = 5;
        const double k = 2.0 * std::numbers::pi * mode / g.length;
        const auto d = functionals(nlse::plane_wave(g, mode));
        CHECK_FALSE(d.regularized);
        for (int i = 0; i < g.n; ++i) {
            CHECK(std::abs(d.r1[static_cast<size_t>(i)]) < 1e-9);
            CHECK(std::abs(d.r2[static_cast<size_t>(i)]) < 1e-9);
            CHECK(d.r3[static_cast<size_t>(i)] == doctest::Approx(k * k).epsilon(1e-10));
            CHECK(std::abs(d.r4[static_cast<size_t>(i)]) < 1e-9);
            CHECK(std::abs(d.r5[static_cast<size_t>(i)]) < 1e-9);
        }
    }

    SUBCASE("unnormalized gaussian exp(-x^2/2): R2 = 4x^2 - 2, R5 = 4x^2") {
        std::vector<cplx> v(static_cast<size_t>(g.n));
        for (int i = 0; i < g.n; ++i) {
            const double x = g.x(i);
            v[static_cast<size_t>(i)] = std::exp(-0.5 * x * x);
        }
        const auto d = functionals(WaveFunction(g, std::move(v)));
        CHECK(d.regularized); // tails cross the floor on this box
        for (int i = 0; i < g.n; ++i) {
            const double x = g.x(i);
            // Stay well above the floor: the rho + eps regularization biases
            // the quotients by eps/rho relative.
            if (std::abs(x) > 3.0) continue;
            CHECK(d.r2[static_cast<size_t>(i)] ==
                  doctest::Approx(4.0 * x * x - 2.0).epsilon(1e-7));
            CHECK(d.r5[static_cast<size_t>(i)] ==
                  doctest::Approx(4.0 * x * x).scale(1.0).epsilon(1e-7));
            CHECK(std::abs(d.r1[static_cast<size_t>(i)]) < 1e-9);
            CHECK(std::abs(d.r3[static_cast<size_t>(i)]) < 1e-9);
            CHECK(std::abs(d.r4[static_cast<size_t>(i)]) < 1e-9);
        }
    }

    SUBCASE("laplacian decomposition holds pointwise for generic states") {
        const auto psi = textured_state(g, 2);
        const auto d = functionals(psi);
        const auto lap = nlse::spectral::derivative(g, psi.values(), 2);
        double max_rel = 0.0;
        for (int i = 0; i < g.n; ++i) {
            const size_t s = static_cast<size_t>(i);
            const cplx combo =
                (cplx(0.0, d.r1[s]) + 0.5 * d.r2[s] - d.r3[s] - 0.25 * d.r5[s]) * psi.values()[s];
            max_rel = std::max(max_rel, std::abs(lap[s] - combo));
        }
        CHECK(max_rel < 1e-10);
    }
}

TEST_CASE("phase unwrapping") {
    const GridSpec g(256, 20.0);

    SUBCASE("positive real state unwraps to zero") {
        const auto r = unwrap_phase(nlse::plane_wave(g, 0));
        for (double s : r.phase) CHECK(s == 0.0);
        CHECK(r.winding == 0);
    }

    SUBCASE("plane wave unwraps to a linear ramp, not a sawtooth") {
        const int mode = 4;
        const double k = 2.0 * std::numbers::pi * mode / g.length;
        const auto psi = nlse::plane_wave(g, mode);
        const auto r = unwrap_phase(psi);
        for (int i = 0; i < g.n; ++i)
            CHECK(r.phase[static_cast<size_t>(i)] - r.phase[0] ==
                  doctest::Approx(k * (g.x(i) - g.x(0))).epsilon(1e-12));
        CHECK(r.winding == mode);
        // exp(iS)|psi| reproduces psi
        for (int i = 0; i < g.n; ++i) {
            const cplx back = std::polar(std::abs(psi.values()[static_cast<size_t>(i)]),
                                         r.phase[static_cast<size_t>(i)]);
            CHECK(std::abs(back - psi.values()[static_cast<size_t>(i)]) < 1e-12);
        }
    }

    SUBCASE("near-zero modulus is a phase-branch error") {
        const auto psi = nlse::gaussian_packet(g, 0.0, 1.0, 0.0);
        CHECK_THROWS_AS((void)unwrap_phase(psi), nlse::PhaseBranchError);
        // but the masked variant works and is exact in the bulk
        const auto masked = unwrap_phase_masked(psi, {});
        for (int i = 0; i < g.n; ++i)
            if (std::abs(g.x(i)) < 4.0)
                CHECK(std::abs(masked.phase[static_cast<size_t>(i)]) < 1e-12);
    }
}

TEST_CASE("gauge application on states") {
    const GridSpec g(256, 20.0);
    const auto psi = textured_state(g, 1);

    SUBCASE("identity") {
        const auto out = apply_gauge(GaugeElement::identity(), psi, 0.0);
        for (int i = 0; i < g.n; ++i)
            CHECK(out.values()[static_cast<size_t>(i)] == psi.values()[static_cast<size_t>(i)]);
    }

    SUBCASE("Lambda = -1 is complex conjugation") {
        const GaugeElement conj_el(TimeFn::zero(), TimeFn::constant(-1.0));
        const auto out = apply_gauge(conj_el, psi, 0.0);
        for (int i = 0; i < g.n; ++i)
            CHECK(std::abs(out.values()[static_cast<size_t>(i)] -
                           std::conj(psi.values()[static_cast<size_t>(i)])) < 1e-15);
    }

    SUBCASE("constant state transforms by the closed form") {
        const double r = 0.8, s = 0.4;
        std::vector<cplx> v(static_cast<size_t>(g.n), std::polar(r, s));
        const WaveFunction cpsi(g, std::move(v));
        const GaugeElement ge(TimeFn::constant(1.3), TimeFn::constant(2.2));
        const auto out = apply_gauge(ge, cpsi, 0.0);
        const cplx expect = std::polar(r, 1.3 * std::log(r) + 2.2 * s);
        for (int i = 0; i < g.n; ++i)
            CHECK(std::abs(out.values()[static_cast<size_t>(i)] - expect) < 1e-13);
    }

    SUBCASE("density invariance for random elements") {
        nlse::Rng rng(17);
        nlse::SamplingOptions opts;
        for (int trial = 0; trial < 20; ++trial) {
            const GaugeElement ge = random_gauge_element(rng, opts, true);
            const auto out = apply_gauge(ge, psi, 0.5);
            for (int i = 0; i < g.n; ++i)
                CHECK(std::abs(std::abs(out.values()[static_cast<size_t>(i)]) -
                               std::abs(psi.values()[static_cast<size_t>(i)])) < 1e-14);
        }
    }

    SUBCASE("group action composes up to a global branch phase") {
        nlse::Rng rng(29);
        nlse::SamplingOptions opts;
        for (int trial = 0; trial < 20; ++trial) {
            const GaugeElement a = random_gauge_element(rng, opts, true);
            const GaugeElement b = random_gauge_element(rng, opts, true);
            const double t = 0.3;
            const auto one_step = apply_gauge(compose(a, b), psi, t);
            const auto two_step = apply_gauge(a, apply_gauge(b, psi, t), t);
            const cplx ref = one_step.values()[0] / two_step.values()[0];
            for (int i = 0; i < g.n; ++i) {
                const cplx ratio = one_step.values()[static_cast<size_t>(i)] /
                                   two_step.values()[static_cast<size_t>(i)];
                CHECK(std::abs(ratio / ref - 1.0) < 1e-10);
            }
        }
    }

    SUBCASE("zero-modulus samples stay zero (projected states)") {
        auto masked = psi.values();
        for (int i = 0; i < 30; ++i) masked[static_cast<size_t>(i)] = 0.0;
        const WaveFunction holey(g, std::move(masked));
        const GaugeElement ge(TimeFn::constant(0.7), TimeFn::one());
        const auto out = apply_gauge(ge, holey, 0.0);
        for (int i = 0; i < 30; ++i)
            CHECK(out.values()[static_cast<size_t>(i)] == cplx(0.0));
    }
}

TEST_CASE("positional measurement projection") {
    const GridSpec g(256, 20.0);
    const auto psi = nlse::gaussian_packet(g, 0.0, 1.0, 0.9).normalized();

    SUBCASE("whole grid leaves a normalized state unchanged") {
        const auto out = measure_project(psi, {{0, g.n}});
        for (int i = 0; i < g.n; ++i)
            CHECK(std::abs(out.values()[static_cast<size_t>(i)] -
                           psi.values()[static_cast<size_t>(i)]) < 1e-12);
    }

    SUBCASE("half box renormalizes on the region") {
        const auto out = measure_project(psi, {{g.n / 2, g.n}});
        CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
        for (int i = 0; i < g.n / 2; ++i)
            CHECK(out.values()[static_cast<size_t>(i)] == cplx(0.0));
    }

    SUBCASE("measurement commutes with gauge in modulus") {
        const GaugeElement ge(TimeFn::constant(0.7), TimeFn::one());
        const std::vector<nlse::IndexInterval> region = {{g.n / 2, g.n}};
        const auto a = apply_gauge(ge, measure_project(psi, region), 1.0);
        const auto b = measure_project(apply_gauge(ge, psi, 1.0), region);
        for (int i = 0; i < g.n; ++i)
            CHECK(std::abs(std::abs(a.values()[static_cast<size_t>(i)]) -
                           std::abs(b.values()[static_cast<size_t>(i)])) < 1e-12);
    }

    SUBCASE("compatibility holds for random invertible elements and regions") {
        nlse::Rng rng(41);
        std::uniform_real_distribution<double> ug(-2.0, 2.0);
        std::uniform_int_distribution<int> usign(0, 1);
        std::uniform_int_distribution<int> ulo(0, g.n / 2);
        for (int trial = 0; trial < 20; ++trial) {
            // Lambda = ±1 keeps the transformed zeros representable; gamma
            // and theta are free.
            const double lam = usign(rng) ? 1.0 : -1.0;
            const GaugeElement ge(TimeFn::constant(ug(rng)), TimeFn::constant(lam),
                                  nlse::SpaceTimeField::separable(
                                      [](double x) { return 0.3 * x; }, TimeFn::one()));
            const int lo = ulo(rng);
            const std::vector<nlse::IndexInterval> region = {{lo, lo + g.n / 3}};
            const auto a = apply_gauge(ge, measure_project(psi, region), 0.5);
            const auto b = measure_project(apply_gauge(ge, psi, 0.5), region);
            for (int i = 0; i < g.n; ++i)
                CHECK(std::abs(std::abs(a.values()[static_cast<size_t>(i)]) -
                               std::abs(b.values()[static_cast<size_t>(i)])) < 1e-12);
        }
    }

    SUBCASE("empty region is an error") {
        const auto narrow = measure_project(psi, {{0, 4}});
        (void)narrow; // tail mass is tiny but nonzero, so this succeeds
        std::vector<cplx> zeros(static_cast<size_t>(g.n), cplx(0.0));
        zeros[10] = 1.0;
        const WaveFunction spike(g, std::move(zeros));
        CHECK_THROWS_AS((void)measure_project(spike, {{100, 120}}), nlse::EmptyRegionError);
    }
}

TEST_CASE("moments") {
    const GridSpec g(256, 20.0);
    const auto psi = nlse::gaussian_packet(g, 1.2, 1.0, 0.8).normalized();
    CHECK(mean_x(psi) == doctest::Approx(1.2).epsilon(1e-9));
    CHECK(variance_x(psi) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(mean_p(psi) == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(nlse::edge_mass(psi) < 1e-12);
}
