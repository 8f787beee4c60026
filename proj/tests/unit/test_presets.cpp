#include <doctest.h>

#include "nlse/presets.hpp"

using nlse::PresetName;
using nlse::PresetParams;

TEST_CASE("linear preset in natural units") {
    const auto c = nlse::preset(PresetName::Linear);
    CHECK(c.nu1.value(0.0) == doctest::Approx(-0.5));
    CHECK(c.mu0.value(0.0) == doctest::Approx(1.0));
    CHECK(c.mu2.value(0.0) == doctest::Approx(-0.25));
    CHECK(c.mu3.value(0.0) == doctest::Approx(0.5));
    CHECK(c.mu5.value(0.0) == doctest::Approx(0.125));
    for (const auto* f : {&c.nu2, &c.mu1, &c.mu4, &c.alpha1, &c.alpha2})
        CHECK(f->value(0.0) == 0.0);
}

TEST_CASE("BM preset adds the logarithmic coupling") {
    PresetParams p;
    p.b = 0.3;
    const auto c = nlse::preset(PresetName::BM, p);
    CHECK(c.alpha1.value(0.0) == doctest::Approx(-0.3));
    CHECK(c.alpha2.value(0.0) == 0.0);
    CHECK(c.nu1.value(0.0) == doctest::Approx(-0.5));
}

TEST_CASE("Kostin preset adds the phase coupling") {
    PresetParams p;
    p.f = 0.1;
    const auto c = nlse::preset(PresetName::Kostin, p);
    CHECK(c.alpha2.value(0.0) == doctest::Approx(0.1));
    CHECK(c.alpha1.value(0.0) == 0.0);
    CHECK(c.mu5.value(0.0) == doctest::Approx(0.125));
}

TEST_CASE("DG preset carries the diffusion coefficient and c-weights") {
    PresetParams p;
    p.D = 0.05;
    p.Dprime = 1.0;
    p.c1 = 0.2;
    p.c2 = 0.3;
    p.c3 = 0.4;
    p.c4 = 0.25;
    p.c5 = 0.1;
    const auto c = nlse::preset(PresetName::DG, p);
    CHECK(c.nu2.value(0.0) == doctest::Approx(0.025)); // hbar D / 2
    CHECK(c.mu1.value(0.0) == doctest::Approx(0.2));
    CHECK(c.mu2.value(0.0) == doctest::Approx(0.3 - 0.25));
    CHECK(c.mu3.value(0.0) == doctest::Approx(0.4 + 0.5));
    CHECK(c.mu4.value(0.0) == doctest::Approx(0.25));
    CHECK(c.mu5.value(0.0) == doctest::Approx(0.1 + 0.125));
}

TEST_CASE("Guerra-Pusterla member is the D=0 slice with c5 = -c2/2") {
    PresetParams p;
    p.c2 = 1.0;
    p.c5 = -0.5;
    const auto gp = nlse::preset(PresetName::GuerraPusterla, p);

    PresetParams dg;
    dg.D = 0.0;
    dg.c2 = 1.0;
    dg.c5 = -0.5;
    const auto direct = nlse::preset(PresetName::DG, dg);
    for (double t : {0.0, 1.0}) {
        CHECK(gp.nu2.value(t) == direct.nu2.value(t));
        CHECK(gp.mu2.value(t) == direct.mu2.value(t));
        CHECK(gp.mu5.value(t) == direct.mu5.value(t));
        CHECK(gp.mu1.value(t) == 0.0);
        CHECK(gp.mu3.value(t) == doctest::Approx(0.5));
        CHECK(gp.mu4.value(t) == 0.0);
    }
}

TEST_CASE("physical constants rescale the members") {
    PresetParams p;
    p.hbar = 2.0;
    p.mass = 0.5;
    const auto c = nlse::preset(PresetName::Linear, p);
    CHECK(c.nu1.value(0.0) == doctest::Approx(-2.0)); // -hbar/(2m)
    CHECK(c.mu0.value(0.0) == doctest::Approx(0.5));  // 1/hbar
}

TEST_CASE("unknown preset name is rejected") {
    CHECK_THROWS_AS((void)nlse::preset_from_string("weinberg"), nlse::InvalidInputError);
}
