#include "nlse/coefficients.hpp"

#include <cmath>

namespace nlse {

bool CoefficientVector::is_constant() const {
    for (const TimeFn* f : {&nu1, &nu2, &mu0, &mu1, &mu2, &mu3, &mu4, &mu5, &alpha1, &alpha2})
        if (!f->is_constant()) return false;
    return true;
}

double CoefficientVector::nu1_checked(double t) const {
    const double v = nu1.value(t);
    if (v == 0.0 || !std::isfinite(v))
        throw InvalidInputError("coefficient vector with nu1(t) = 0");
    return v;
}

CoefficientVector embed_linear(const LinearMember& lin) {
    CoefficientVector c;
    c.nu1 = lin.nu1;
    c.nu2 = TimeFn::zero();
    c.mu0 = lin.mu0;
    c.mu1 = TimeFn::zero();
    c.mu2 = 0.5 * lin.nu1;
    c.mu3 = -lin.nu1;
    c.mu4 = TimeFn::zero();
    c.mu5 = -0.25 * lin.nu1;
    c.alpha1 = TimeFn::zero();
    c.alpha2 = TimeFn::zero();
    return c;
}

namespace {

void check_nondegenerate(const GaugeElement& g) {
    if (g.lambda().is_constant() && g.lambda().constant_value() == 0.0)
        throw InvalidElementError("degenerate gauge element: Lambda = 0");
}

void note_tabulated_boundaries(const GaugeElement& g, CoefficientVector& out) {
    if (g.gamma().contains_tabulated() || g.lambda().contains_tabulated())
        out.warnings.push_back(
            "boundary-derivative: tabulated gauge parameter, one-sided stencils at table ends");
}

} // namespace

CoefficientVector act_on_coefficients(const GaugeElement& g, const CoefficientVector& c) {
    if (!g.theta_is_zero())
        throw InvalidInputError(
            "act_on_coefficients requires a pure nonlinear element (theta = 0)");
    check_nondegenerate(g);
    if (c.nu1.is_constant() && c.nu1.constant_value() == 0.0)
        throw InvalidInputError("coefficient vector with nu1 = 0");

    const TimeFn& G = g.gamma();
    const TimeFn& L = g.lambda();
    const TimeFn Gd = G.derivative_fn();
    const TimeFn Ld = L.derivative_fn();

    CoefficientVector r;
    r.nu1 = c.nu1 / L;
    r.nu2 = c.nu2 - (G * c.nu1) / (2.0 * L);
    r.mu0 = L * c.mu0;
    r.mu1 = c.mu1 - (G * c.nu1) / L;
    r.mu2 = (G * G * c.nu1) / (2.0 * L) - G * c.nu2 - 0.5 * (G * c.mu1) + L * c.mu2;
    r.mu3 = c.mu3 / L;
    r.mu4 = c.mu4 - (G * c.mu3) / L;
    r.mu5 = (G * G * c.mu3) / (4.0 * L) - 0.5 * (G * c.mu4) + L * c.mu5;
    r.alpha1 = L * c.alpha1 - 0.5 * (G * c.alpha2) + 0.5 * ((G * Ld) / L - Gd);
    r.alpha2 = c.alpha2 - Ld / L;
    r.warnings = c.warnings;
    note_tabulated_boundaries(g, r);
    return r;
}

CoefficientVector closure_coefficients(const LinearMember& lin, const GaugeElement& g) {
    if (lin.nu1.is_constant() && lin.nu1.constant_value() == 0.0)
        throw InvalidInputError("linear member with nu1 = 0");
    check_nondegenerate(g);

    const TimeFn& G = g.gamma();
    const TimeFn& L = g.lambda();
    const TimeFn Gd = G.derivative_fn();
    const TimeFn Ld = L.derivative_fn();

    CoefficientVector r;
    r.nu1 = lin.nu1 / L;
    r.mu0 = L * lin.mu0;
    r.mu1 = -((G * lin.nu1) / L);
    r.nu2 = 0.5 * r.mu1;
    const TimeFn kappa = ((G * G + L * L - 1.0) * lin.nu1) / (2.0 * L);
    r.mu2 = kappa + 0.5 * r.nu1;
    r.mu3 = -r.nu1;
    r.mu4 = -r.mu1;
    const TimeFn xi = -0.5 * kappa;
    r.mu5 = xi - 0.25 * r.nu1;
    r.alpha1 = 0.5 * ((G * Ld) / L - Gd);
    r.alpha2 = -(Ld / L);
    note_tabulated_boundaries(g, r);
    return r;
}

} // namespace nlse
