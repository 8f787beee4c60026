#include <doctest.h>

#include <cmath>

#include "nlse/invariants.hpp"
#include "nlse/presets.hpp"
#include "nlse/sampling.hpp"

using nlse::CoefficientVector;
using nlse::FamilyTag;
using nlse::GaugeElement;
using nlse::TimeFn;
using nlse::TimeWindow;

TEST_CASE("free linear member invariants") {
    const CoefficientVector c = nlse::preset(nlse::PresetName::Linear);
    const nlse::InvariantVector iv = invariants(c);
    const auto v = iv.values(0.0);
    CHECK(v[0] == doctest::Approx(-0.5));
    CHECK(v[1] == doctest::Approx(0.125));
    for (size_t k = 2; k < 8; ++k) CHECK(v[k] == doctest::Approx(0.0));
}

TEST_CASE("gauge-acted member keeps its invariants (worked values)") {
    const CoefficientVector c = nlse::embed_linear({TimeFn::constant(-0.5), TimeFn::one()});
    const GaugeElement g(TimeFn::one(), TimeFn::one());
    const CoefficientVector r = act_on_coefficients(g, c);
    const auto v = invariants(r).values(0.0);
    // iota1' = nu1'*mu2' - nu2'*mu1' = 1/4 - 1/8 = 1/8
    CHECK(v[1] == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(v[0] == doctest::Approx(-0.5).epsilon(1e-14));
    for (size_t k = 2; k < 8; ++k) CHECK(std::abs(v[k]) < 1e-14);
}

TEST_CASE("DG preset with constant parameters has iota7 = 0") {
    nlse::PresetParams p;
    p.D = 0.05;
    p.c2 = 0.3;
    const CoefficientVector c = nlse::preset(nlse::PresetName::DG, p);
    CHECK(invariants(c).values(0.7)[7] == doctest::Approx(0.0));
}

TEST_CASE("invariance under random elements including time-dependent ones") {
    nlse::Rng rng(5);
    nlse::SamplingOptions opts;
    for (int trial = 0; trial < 200; ++trial) {
        const CoefficientVector c = random_coefficients(rng, opts);
        const GaugeElement g = random_gauge_element(rng, opts, true);
        const auto before = invariants(c);
        const auto after = invariants(act_on_coefficients(g, c));
        for (double t : {0.0, 0.3, 0.6, 1.0}) {
            const auto vb = before.values(t);
            const auto va = after.values(t);
            for (size_t k = 0; k < 8; ++k) {
                const double denom = std::max({std::abs(vb[k]), std::abs(va[k]), 1e-6});
                CHECK(std::abs(va[k] - vb[k]) / denom <= 1e-10);
            }
        }
    }
}

TEST_CASE("invariants require nonvanishing nu1") {
    CoefficientVector c = nlse::preset(nlse::PresetName::Linear);
    c.nu1 = TimeFn::linear(1.0, -0.5); // crosses zero at t = 0.5
    const auto iv = invariants(c);
    CHECK_THROWS_AS((void)iv.values(0.5), nlse::SingularInvariantError);
    CHECK_THROWS_AS((void)classify(iv, TimeWindow{0.0, 1.0}), nlse::SingularInvariantError);
}

TEST_CASE("classification rows of the full chain") {
    const TimeWindow w{0.0, 1.0};

    SUBCASE("zero pattern rows") {
        const CoefficientVector lin = nlse::preset(nlse::PresetName::Linear);
        CHECK(classify(invariants(lin), w) == FamilyTag::F0);

        nlse::PresetParams bm;
        bm.b = 0.3;
        CHECK(classify(invariants(nlse::preset(nlse::PresetName::BM, bm)), w) == FamilyTag::F1);

        nlse::PresetParams ko;
        ko.f = 0.1;
        CHECK(classify(invariants(nlse::preset(nlse::PresetName::Kostin, ko)), w) ==
              FamilyTag::F1);

        nlse::PresetParams dg3;
        dg3.D = 0.05;
        dg3.c2 = 0.3;
        dg3.c5 = 0.1;
        CHECK(classify(invariants(nlse::preset(nlse::PresetName::DG, dg3)), w) == FamilyTag::F3);

        nlse::PresetParams dg5 = dg3;
        dg5.c3 = 0.4;
        dg5.c4 = 0.25;
        CHECK(classify(invariants(nlse::preset(nlse::PresetName::DG, dg5)), w) == FamilyTag::F5);

        // all eight invariants nonzero
        CoefficientVector full = nlse::preset(nlse::PresetName::DG, dg5);
        full.alpha1 = TimeFn::constant(0.2);
        full.alpha2 = TimeFn::constant(0.1);
        const auto iv = invariants(full);
        for (size_t k = 0; k < 8; ++k) CHECK(std::abs(iv.values(0.5)[k]) > 1e-6);
        CHECK(classify(iv, w) == FamilyTag::F5);
    }

    SUBCASE("classification is idempotent under the group action") {
        nlse::Rng rng(31);
        nlse::SamplingOptions opts;
        opts.allow_tabulated = false;
        for (int trial = 0; trial < 60; ++trial) {
            const CoefficientVector c = random_coefficients(rng, opts);
            const GaugeElement g = random_gauge_element(rng, opts, true);
            const FamilyTag before = classify(invariants(c), w);
            const FamilyTag after = classify(invariants(act_on_coefficients(g, c)), w);
            CHECK(before == after);
        }
    }
}

TEST_CASE("restricted chain classification") {
    const TimeWindow w{0.0, 1.0};

    CHECK(classify_restricted(nlse::preset(nlse::PresetName::Linear), w) == FamilyTag::R0);

    nlse::PresetParams bm;
    bm.b = 0.3;
    CHECK(classify_restricted(nlse::preset(nlse::PresetName::BM, bm), w) == FamilyTag::R1);

    nlse::PresetParams dg3;
    dg3.D = 0.05;
    dg3.c2 = 0.3;
    CHECK(classify_restricted(nlse::preset(nlse::PresetName::DG, dg3), w) == FamilyTag::R3);

    nlse::PresetParams dg5 = dg3;
    dg5.c3 = 0.4;
    dg5.c4 = 0.25;
    CHECK(classify_restricted(nlse::preset(nlse::PresetName::DG, dg5), w) == FamilyTag::R5);

    SUBCASE("phase-term members fall outside the restricted chain") {
        nlse::PresetParams ko;
        ko.f = 0.1;
        CHECK(classify_restricted(nlse::preset(nlse::PresetName::Kostin, ko), w) ==
              FamilyTag::Unclassified);
    }

    SUBCASE("time-dependent nu1 falls outside the restricted chain") {
        const CoefficientVector c = nlse::embed_linear({TimeFn::constant(-0.5), TimeFn::one()});
        const GaugeElement g(TimeFn::zero(), TimeFn::exponential(1.0, 0.2));
        CHECK(classify_restricted(act_on_coefficients(g, c), w) == FamilyTag::Unclassified);
    }
}
