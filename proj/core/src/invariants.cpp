#include "nlse/invariants.hpp"

#include <cmath>

namespace nlse {

std::array<double, 8> InvariantVector::values(double t) const {
    std::array<double, 8> v{};
    for (size_t k = 0; k < 8; ++k) v[k] = iota[k].value(t);
    return v;
}

InvariantVector invariants(const CoefficientVector& c) {
    if (c.nu1.is_constant() && c.nu1.constant_value() == 0.0)
        throw SingularInvariantError("invariants undefined for nu1 = 0");

    const TimeFn nu1d = c.nu1.derivative_fn();
    const TimeFn nu2d = c.nu2.derivative_fn();

    InvariantVector iv;
    iv.iota[0] = c.nu1 * c.mu0;
    iv.iota[1] = c.nu1 * c.mu2 - c.nu2 * c.mu1;
    iv.iota[2] = c.mu1 - 2.0 * c.nu2;
    iv.iota[3] = 1.0 + c.mu3 / c.nu1;
    iv.iota[4] = c.mu4 - (c.mu1 * c.mu3) / c.nu1;
    iv.iota[5] = c.nu1 * (c.mu2 + 2.0 * c.mu5) - c.nu2 * (c.mu1 + 2.0 * c.mu4) +
                 (2.0 * (c.nu2 * c.nu2) * c.mu3) / c.nu1;
    iv.iota[6] = c.nu1 * c.alpha1 - c.nu2 * c.alpha2 + (c.nu2 * nu1d) / c.nu1 - nu2d;
    iv.iota[7] = c.alpha2 - nu1d / c.nu1;
    return iv;
}

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::F0: return "F0";
        case FamilyTag::F1: return "F1";
        case FamilyTag::F3: return "F3";
        case FamilyTag::F5: return "F5";
        case FamilyTag::R0: return "R0";
        case FamilyTag::R1: return "R1";
        case FamilyTag::R3: return "R3";
        case FamilyTag::R5: return "R5";
        case FamilyTag::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

namespace {

struct WindowStats {
    std::array<double, 8> max_abs{};
    std::array<double, 8> spread{}; // max - min, for time-independence checks
};

WindowStats sample_invariants(const InvariantVector& iv, TimeWindow w, int samples) {
    WindowStats s;
    std::array<double, 8> lo{}, hi{};
    lo.fill(std::numeric_limits<double>::infinity());
    hi.fill(-std::numeric_limits<double>::infinity());
    const int n = std::max(2, samples);
    for (int i = 0; i < n; ++i) {
        const double t = w.t0 + (w.t1 - w.t0) * static_cast<double>(i) / (n - 1);
        for (size_t k = 0; k < 8; ++k) {
            const double v = iv.iota[k].value(t);
            if (!std::isfinite(v))
                throw SingularInvariantError("invariant not finite on the window (nu1 zero crossing?)");
            s.max_abs[k] = std::max(s.max_abs[k], std::abs(v));
            lo[k] = std::min(lo[k], v);
            hi[k] = std::max(hi[k], v);
        }
    }
    for (size_t k = 0; k < 8; ++k) s.spread[k] = hi[k] - lo[k];
    return s;
}

} // namespace

FamilyTag classify(const InvariantVector& iv, TimeWindow window, ClassifyOptions opts) {
    const WindowStats s = sample_invariants(iv, window, opts.samples);
    const double scale = s.max_abs[0] > 0.0 ? s.max_abs[0] : 1.0;
    const auto zero = [&](size_t k) { return s.max_abs[k] <= opts.eps_rel * scale; };

    const bool z2345 = zero(2) && zero(3) && zero(4) && zero(5);
    if (z2345 && zero(6) && zero(7)) return FamilyTag::F0;
    if (z2345) return FamilyTag::F1;
    if (zero(3) && zero(4)) return FamilyTag::F3;
    return FamilyTag::F5;
}

FamilyTag classify_restricted(const CoefficientVector& c, TimeWindow window,
                              ClassifyOptions opts) {
    const InvariantVector iv = invariants(c);
    const WindowStats s = sample_invariants(iv, window, opts.samples);
    const double scale = s.max_abs[0] > 0.0 ? s.max_abs[0] : 1.0;
    const double tol = opts.eps_rel * scale;
    const auto zero = [&](size_t k) { return s.max_abs[k] <= tol; };

    // Membership in the restricted chain: nu1 and mu0 time-independent
    // (checked through iota0 and iota7 spreads plus nu1 itself) and no
    // phase-proportional term.
    const int n = std::max(2, opts.samples);
    double nu1_lo = std::numeric_limits<double>::infinity();
    double nu1_hi = -std::numeric_limits<double>::infinity();
    double a2_max = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = window.t0 + (window.t1 - window.t0) * static_cast<double>(i) / (n - 1);
        const double v = c.nu1_checked(t);
        nu1_lo = std::min(nu1_lo, v);
        nu1_hi = std::max(nu1_hi, v);
        a2_max = std::max(a2_max, std::abs(c.alpha2.value(t)));
    }
    const double nu1_scale = std::max(std::abs(nu1_lo), std::abs(nu1_hi));
    const bool nu1_const = (nu1_hi - nu1_lo) <= opts.eps_rel * nu1_scale;
    const bool mu0_const = s.spread[0] <= tol; // iota0 = nu1*mu0 with constant nu1
    const bool alpha2_zero = a2_max <= opts.eps_rel * std::max(1.0, nu1_scale);
    if (!nu1_const || !mu0_const || !alpha2_zero) return FamilyTag::Unclassified;

    const bool z2345 = zero(2) && zero(3) && zero(4) && zero(5);
    if (z2345 && zero(6)) return FamilyTag::R0;
    if (z2345) return FamilyTag::R1;
    if (zero(3) && zero(4)) return FamilyTag::R3;
    return FamilyTag::R5;
}

} // namespace nlse
