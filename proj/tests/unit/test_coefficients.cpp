#include <doctest.h>

#include <array>
#include <cmath>

#include "nlse/coefficients.hpp"
#include "nlse/presets.hpp"
#include "nlse/sampling.hpp"
#include "nlse/verification.hpp"

using nlse::CoefficientVector;
using nlse::GaugeElement;
using nlse::LinearMember;
using nlse::TimeFn;

namespace {

std::array<double, 10> values_at(const CoefficientVector& c, double t) {
    return {c.nu1.value(t), c.nu2.value(t), c.mu0.value(t),    c.mu1.value(t),
            c.mu2.value(t), c.mu3.value(t), c.mu4.value(t),    c.mu5.value(t),
            c.alpha1.value(t), c.alpha2.value(t)};
}

} // namespace

TEST_CASE("identity element leaves coefficients unchanged") {
    const CoefficientVector c = nlse::preset(nlse::PresetName::DG, [] {
        nlse::PresetParams p;
        p.D = 0.05;
        p.c2 = 0.3;
        return p;
    }());
    const CoefficientVector r = act_on_coefficients(GaugeElement::identity(), c);
    const auto a = values_at(c, 0.4), b = values_at(r, 0.4);
    for (size_t i = 0; i < a.size(); ++i) CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-15));
}

TEST_CASE("worked action on the free linear member") {
    // (nu1=-1/2, mu0=1, mu2=-1/4, mu3=1/2, mu5=1/8) under (gamma=1, Lambda=1).
    const CoefficientVector c = nlse::embed_linear({TimeFn::constant(-0.5), TimeFn::one()});
    const GaugeElement g(TimeFn::one(), TimeFn::one());
    const CoefficientVector r = act_on_coefficients(g, c);

    CHECK(r.nu1.value(0.0) == doctest::Approx(-0.5));
    CHECK(r.nu2.value(0.0) == doctest::Approx(0.25));
    CHECK(r.mu0.value(0.0) == doctest::Approx(1.0));
    CHECK(r.mu1.value(0.0) == doctest::Approx(0.5));
    CHECK(r.mu2.value(0.0) == doctest::Approx(-0.5));
    CHECK(r.mu3.value(0.0) == doctest::Approx(0.5));
    CHECK(r.mu4.value(0.0) == doctest::Approx(-0.5));
    CHECK(r.mu5.value(0.0) == doctest::Approx(0.25));
    CHECK(r.alpha1.value(0.0) == doctest::Approx(0.0));
    CHECK(r.alpha2.value(0.0) == doctest::Approx(0.0));

    // kappa' = mu2' - nu1'/2 cross-check against the constrained form.
    CHECK(r.kappa().value(0.0) == doctest::Approx(-0.25));
}

TEST_CASE("time-dependent gamma produces the alpha1 drift") {
    const CoefficientVector c = nlse::embed_linear({TimeFn::constant(-0.5), TimeFn::one()});
    const GaugeElement g(TimeFn::linear(0.2, 0.0), TimeFn::one());
    const CoefficientVector r = act_on_coefficients(g, c);
    for (double t : {0.0, 0.5, 1.0}) {
        CHECK(r.alpha1.value(t) == doctest::Approx(-0.1).epsilon(1e-14));
        CHECK(r.alpha2.value(t) == doctest::Approx(0.0));
    }
}

TEST_CASE("theta must vanish for the coefficient action") {
    const CoefficientVector c = nlse::preset(nlse::PresetName::Linear);
    const nlse::SpaceTimeField theta = nlse::SpaceTimeField::separable(
        [](double x) { return x; }, TimeFn::one());
    const GaugeElement g(TimeFn::zero(), TimeFn::one(), theta);
    CHECK_THROWS_AS((void)act_on_coefficients(g, c), nlse::InvalidInputError);
}

TEST_CASE("closure of the linear family") {
    const LinearMember lin{TimeFn::constant(-0.5), TimeFn::one()};

    SUBCASE("identity gives the embedding with vanishing nonlinear brackets") {
        const CoefficientVector r = closure_coefficients(lin, GaugeElement::identity());
        CHECK(r.mu2.value(0.0) == doctest::Approx(-0.25)); // nu1/2
        CHECK(r.mu3.value(0.0) == doctest::Approx(0.5));   // -nu1
        CHECK(r.mu5.value(0.0) == doctest::Approx(0.125)); // -nu1/4
        CHECK(r.nu2.value(0.0) == doctest::Approx(0.0));
        CHECK(r.mu1.value(0.0) == doctest::Approx(0.0));
        CHECK(r.mu4.value(0.0) == doctest::Approx(0.0));
    }

    SUBCASE("worked closure values at (gamma=1, Lambda=1)") {
        const GaugeElement g(TimeFn::one(), TimeFn::one());
        const CoefficientVector r = closure_coefficients(lin, g);
        CHECK(r.kappa().value(0.0) == doctest::Approx(-0.25));
        CHECK(r.mu1.value(0.0) == doctest::Approx(0.5));
        CHECK(r.alpha1.value(0.0) == doctest::Approx(0.0));
        CHECK(r.alpha2.value(0.0) == doctest::Approx(0.0));
    }

    SUBCASE("constant parameters give alpha' = 0") {
        const GaugeElement g(TimeFn::constant(1.7), TimeFn::constant(0.6));
        const CoefficientVector r = closure_coefficients(lin, g);
        CHECK(r.alpha1.value(0.3) == doctest::Approx(0.0));
        CHECK(r.alpha2.value(0.3) == doctest::Approx(0.0));
    }

    SUBCASE("matches the action on the embedded member") {
        nlse::Rng rng(11);
        nlse::SamplingOptions opts;
        for (int trial = 0; trial < 100; ++trial) {
            const GaugeElement g = random_gauge_element(rng, opts, true);
            const CoefficientVector via_closure = closure_coefficients(lin, g);
            const CoefficientVector via_action = act_on_coefficients(g, embed_linear(lin));
            for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const auto a = values_at(via_closure, t), b = values_at(via_action, t);
                for (size_t i = 0; i < a.size(); ++i)
                    CHECK(std::abs(a[i] - b[i]) <= 1e-12 * std::max(1.0, std::abs(a[i])));
            }
        }
    }
}

TEST_CASE("action is a group homomorphism on coefficients") {
    nlse::Rng rng(23);
    nlse::SamplingOptions opts;
    for (int trial = 0; trial < 50; ++trial) {
        const CoefficientVector c = random_coefficients(rng, opts);
        const GaugeElement a = random_gauge_element(rng, opts, true);
        const GaugeElement b = random_gauge_element(rng, opts, true);
        const CoefficientVector lhs = act_on_coefficients(compose(a, b), c);
        const CoefficientVector rhs = act_on_coefficients(a, act_on_coefficients(b, c));
        for (double t : {0.1, 0.6, 0.9}) {
            const auto va = values_at(lhs, t), vb = values_at(rhs, t);
            for (size_t i = 0; i < va.size(); ++i)
                CHECK(std::abs(va[i] - vb[i]) <=
                      1e-10 * std::max({1.0, std::abs(va[i]), std::abs(vb[i])}));
        }
    }
}

TEST_CASE("orbits of the two-parameter group are two dimensional") {
    const CoefficientVector c = nlse::preset(nlse::PresetName::DG, [] {
        nlse::PresetParams p;
        p.D = 0.07;
        p.c1 = 0.2;
        p.c2 = 0.3;
        p.c3 = 0.1;
        return p;
    }());
    const auto rep = nlse::orbit_jacobian_rank(c, 0.8, 1.6, 0.0);
    CHECK(rep.sigma1 > 1e-3);
    CHECK(rep.sigma2 > 1e-6 * rep.sigma1);
}

TEST_CASE("tabulated gauge parameters attach a boundary-derivative warning") {
    const CoefficientVector c = nlse::preset(nlse::PresetName::Linear);
    const TimeFn lam = TimeFn::tabulated(0.0, 0.25, {1.0, 1.2, 1.1, 0.9, 1.0});
    const GaugeElement g(TimeFn::zero(), lam);
    const CoefficientVector r = act_on_coefficients(g, c);
    REQUIRE(!r.warnings.empty());
    CHECK(r.warnings.front().find("boundary-derivative") != std::string::npos);
}
