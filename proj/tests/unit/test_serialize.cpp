#include <doctest.h>

#include "nlse/presets.hpp"
#include "nlse/serialize.hpp"

using nlse::json;
using nlse::TimeFn;

TEST_CASE("TimeFn kinds round-trip through JSON") {
    const std::vector<TimeFn> fns = {
        TimeFn::constant(-0.5),
        TimeFn::linear(0.2, 1.0),
        TimeFn::exponential(2.0, -0.7),
        TimeFn::tabulated(0.0, 0.25, {1.0, 1.5, 1.2, 0.8, 1.1}),
    };
    for (const TimeFn& f : fns) {
        const json j = nlse::timefn_to_json(f);
        const TimeFn g = nlse::timefn_from_json(j);
        const json j2 = nlse::timefn_to_json(g);
        CHECK(j == j2);
        for (double t : {0.0, 0.3, 0.9})
            CHECK(g.value(t) == doctest::Approx(f.value(t)).epsilon(1e-15));
    }
}

TEST_CASE("composite TimeFns serialize as sampled tables") {
    const TimeFn f = TimeFn::linear(1.0, 0.0) * TimeFn::exponential(1.0, -1.0);
    const nlse::SampleWindow w{0.0, 2.0, 33};
    const json j = nlse::timefn_to_json(f, w);
    CHECK(j.at("kind") == "tabulated");
    const TimeFn g = nlse::timefn_from_json(j);
    CHECK(g.value(1.0) == doctest::Approx(f.value(1.0)).epsilon(1e-12));
    // the emitted artifact re-parses and re-emits identically
    CHECK(nlse::timefn_to_json(g) == j);
}

TEST_CASE("coefficient vectors use the documented field names") {
    const auto c = nlse::preset(nlse::PresetName::DG, [] {
        nlse::PresetParams p;
        p.D = 0.05;
        p.c2 = 0.3;
        return p;
    }());
    const json j = nlse::coefficients_to_json(c);
    for (const char* k :
         {"nu1", "nu2", "mu0", "mu1", "mu2", "mu3", "mu4", "mu5", "alpha1", "alpha2"})
        CHECK(j.contains(k));
    const auto back = nlse::coefficients_from_json(j);
    for (double t : {0.0, 1.0}) {
        CHECK(back.nu2.value(t) == c.nu2.value(t));
        CHECK(back.mu5.value(t) == c.mu5.value(t));
    }
}

TEST_CASE("gauge elements round-trip including theta descriptors") {
    const json j = {
        {"gamma", {{"kind", "linear"}, {"slope", 0.2}, {"intercept", 0.0}}},
        {"lambda", {{"kind", "constant"}, {"value", 2.0}}},
        {"theta",
         {{"kind", "separable"},
          {"time", {{"kind", "constant"}, {"value", 1.0}}},
          {"space", {{"kind", "cosine"}, {"amplitude", 0.5}, {"wavenumber", 0.3}, {"phase", 0.0}}}}}};
    const nlse::GaugeElement g = nlse::gauge_from_json(j);
    CHECK(g.gamma().value(1.0) == doctest::Approx(0.2));
    CHECK(g.theta().value(0.0, 1.0) == doctest::Approx(0.5));
    const json j2 = nlse::gauge_to_json(g);
    CHECK(j2.at("theta") == j.at("theta"));
    CHECK(nlse::gauge_to_json(nlse::gauge_from_json(j2)) == j2);
}

TEST_CASE("unknown keys are rejected everywhere") {
    CHECK_THROWS_AS((void)nlse::timefn_from_json(json{{"kind", "constant"},
                                                      {"value", 1.0},
                                                      {"extra", 2.0}}),
                    nlse::ConfigError);
    CHECK_THROWS_AS((void)nlse::gauge_from_json(json{{"gamma", 0.0},
                                                     {"lambda", 1.0},
                                                     {"texture", 1}}),
                    nlse::ConfigError);
}

TEST_CASE("tabulated TimeFn without a table step is a schema error") {
    const json j = {{"kind", "tabulated"}, {"t0", 0.0}, {"values", {1.0, 2.0, 3.0}}};
    CHECK_THROWS_AS((void)nlse::timefn_from_json(j), nlse::ConfigError);
}

TEST_CASE("invariant reports round-trip") {
    const auto iv = nlse::invariants(nlse::preset(nlse::PresetName::Linear));
    const json j = nlse::invariants_to_json(iv);
    const auto back = nlse::invariants_from_json(j);
    for (size_t k = 0; k < 8; ++k)
        CHECK(back.iota[k].value(0.5) == doctest::Approx(iv.iota[k].value(0.5)).epsilon(1e-14));
}
