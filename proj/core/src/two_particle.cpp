#include "nlse/two_particle.hpp"

#include <cmath>

namespace nlse {

TwoParticleState::TwoParticleState(GridSpec grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(grid_.n) * static_cast<size_t>(grid_.n))
        throw InvalidInputError("two-particle sample count does not match grid");
}

double TwoParticleState::norm() const {
    double s = 0.0;
    for (const cplx& v : values_) s += std::norm(v);
    const double dx = grid_.dx();
    return std::sqrt(s * dx * dx);
}

TwoParticleState product_state(const WaveFunction& psi1, const WaveFunction& psi2) {
    if (!(psi1.grid() == psi2.grid()))
        throw InvalidInputError("product state requires matching grids");
    const int n = psi1.grid().n;
    std::vector<cplx> v(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const cplx a = psi1.values()[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j)
            v[static_cast<size_t>(i) * n + j] = a * psi2.values()[static_cast<size_t>(j)];
    }
    return TwoParticleState(psi1.grid(), std::move(v));
}

TwoParticleState apply_gauge_product(const GaugeElement& g, const TwoParticleState& state,
                                     double t) {
    const double lam = g.lambda_checked(t);
    const double gam = g.gamma().value(t);
    const bool has_theta = !g.theta_is_zero();
    const int n = state.grid().n;
    std::vector<cplx> out(state.values().size());

    std::vector<double> theta1(static_cast<size_t>(n), 0.0);
    if (has_theta)
        for (int i = 0; i < n; ++i)
            theta1[static_cast<size_t>(i)] = g.theta().value(state.grid().x(i), t);

    const bool lam_one = std::abs(lam - 1.0) < 1e-12;
    const bool lam_minus_one = std::abs(lam + 1.0) < 1e-12;

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cplx v = state.at(i, j);
            const double a = std::abs(v);
            const size_t idx = static_cast<size_t>(i) * n + j;
            if (a == 0.0) {
                out[idx] = 0.0;
                continue;
            }
            const double th = theta1[static_cast<size_t>(i)] + theta1[static_cast<size_t>(j)];
            if (lam_one || lam_minus_one) {
                const cplx base = lam_minus_one ? std::conj(v) : v;
                const double extra = gam * std::log(a) + th;
                out[idx] = (extra == 0.0) ? base : base * std::polar(1.0, extra);
            } else {
                out[idx] = std::polar(a, gam * std::log(a) + lam * std::arg(v) + th);
            }
        }
    }
    return TwoParticleState(state.grid(), std::move(out));
}

} // namespace nlse
