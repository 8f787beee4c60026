#include <doctest.h>

#include <cmath>

#include "nlse/time_fn.hpp"

using nlse::TimeFn;

TEST_CASE("closed-form kinds evaluate and differentiate analytically") {
    const TimeFn c = TimeFn::constant(3.5);
    CHECK(c.value(0.0) == 3.5);
    CHECK(c.value(17.0) == 3.5);
    CHECK(c.derivative(2.0) == 0.0);

    const TimeFn lin = TimeFn::linear(2.0, -1.0);
    CHECK(lin.value(0.5) == doctest::Approx(0.0));
    CHECK(lin.derivative(12.0) == 2.0);
    CHECK(lin.derivative_fn().value(0.3) == 2.0);

    const TimeFn ex = TimeFn::exponential(2.0, -0.5);
    CHECK(ex.value(0.0) == 2.0);
    CHECK(ex.derivative(1.0) == doctest::Approx(-0.5 * 2.0 * std::exp(-0.5)).epsilon(1e-14));
    CHECK(ex.derivative_fn().value(1.0) == doctest::Approx(ex.derivative(1.0)).epsilon(1e-15));
}

TEST_CASE("tabulated interpolation, domain, and second-order derivative") {
    // Samples of t^2 on [0,1]; centered differences are exact for parabolas
    // in the interior and the one-sided ends are second order.
    const int n = 11;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        const double t = 0.1 * i;
        v[i] = t * t;
    }
    const TimeFn tab = TimeFn::tabulated(0.0, 0.1, v);

    CHECK(tab.value(0.5) == doctest::Approx(0.25));
    CHECK(tab.value(1.0) == doctest::Approx(1.0));
    CHECK(tab.derivative(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tab.derivative(0.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(tab.derivative(1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)tab.value(1.5), nlse::TimeDomainError);
    CHECK_THROWS_AS((void)tab.value(-0.2), nlse::TimeDomainError);

    CHECK(tab.contains_tabulated());
    CHECK_FALSE(TimeFn::linear(1.0, 0.0).contains_tabulated());
}

TEST_CASE("expression algebra with constant folding") {
    const TimeFn a = TimeFn::linear(1.0, 0.0);
    const TimeFn expr = (2.0 * a + 1.0) / (a * a + 1.0);
    const double t = 0.7;
    CHECK(expr.value(t) == doctest::Approx((2 * t + 1) / (t * t + 1)).epsilon(1e-15));
    const double expect_d =
        (2 * (t * t + 1) - (2 * t + 1) * 2 * t) / ((t * t + 1) * (t * t + 1));
    CHECK(expr.derivative(t) == doctest::Approx(expect_d).epsilon(1e-14));
    CHECK(expr.derivative_fn().value(t) == doctest::Approx(expect_d).epsilon(1e-14));

    CHECK((TimeFn::constant(2.0) * TimeFn::constant(3.0)).is_constant());
    CHECK((TimeFn::constant(2.0) * TimeFn::constant(3.0)).constant_value() == 6.0);
    CHECK((TimeFn::zero() * a).is_constant());
    CHECK((a + TimeFn::zero()).kind() == nlse::TimeFnKind::linear);
}

TEST_CASE("disjoint tabulated domains are rejected") {
    const TimeFn t1 = TimeFn::tabulated(0.0, 0.1, {0.0, 1.0, 2.0});
    const TimeFn t2 = TimeFn::tabulated(5.0, 0.1, {0.0, 1.0, 2.0});
    CHECK_THROWS_AS((void)(t1 + t2), nlse::TimeDomainError);
    CHECK_THROWS_AS((void)(t1 * t2), nlse::TimeDomainError);
}

TEST_CASE("division by a constant zero is rejected") {
    CHECK_THROWS_AS((void)(TimeFn::one() / TimeFn::zero()), nlse::SingularInvariantError);
}
