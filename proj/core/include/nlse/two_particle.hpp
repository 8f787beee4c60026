#pragma once

#include "nlse/wavefunction.hpp"

namespace nlse {

/// Two-particle state on the product grid; values[i*n + j] = Ψ(x_i, x_j).
class TwoParticleState {
public:
    TwoParticleState(GridSpec grid, std::vector<cplx> values);

    const GridSpec& grid() const { return grid_; }
    const std::vector<cplx>& values() const { return values_; }
    cplx at(int i, int j) const { return values_[static_cast<size_t>(i) * grid_.n + j]; }

    /// sqrt(ΣΣ |Ψ_ij|² dx²)
    double norm() const;

private:
    GridSpec grid_;
    std::vector<cplx> values_;
};

/// Ψ(x_i,x_j) = ψ₁(x_i)·ψ₂(x_j); both factors must share the grid.
TwoParticleState product_state(const WaveFunction& psi1, const WaveFunction& psi2);

/// Two-particle gauge transformation with the summed phase field
/// θ₂(x₁,x₂,t) = θ(x₁,t) + θ(x₂,t). On product states it factorizes for
/// every (γ,Λ,θ). Λ(t) outside ±1 uses the principal branch of arg Ψ per
/// sample (no two-dimensional unwrap is attempted).
TwoParticleState apply_gauge_product(const GaugeElement& g, const TwoParticleState& state,
                                     double t);

} // namespace nlse
