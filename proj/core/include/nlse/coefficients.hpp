#pragma once

#include <string>
#include <vector>

#include "nlse/gauge.hpp"
#include "nlse/time_fn.hpp"

namespace nlse {

/// The ten time-dependent coefficients (ν₁,ν₂,μ₀…μ₅,α₁,α₂) of the family
///
///   i ∂t ψ = (ν₁Δ + μ₀V)ψ + iν₂R₂ψ + μ₁R₁ψ + (μ₂-ν₁/2)R₂ψ + (μ₃+ν₁)R₃ψ
///            + μ₄R₄ψ + (μ₅+ν₁/4)R₅ψ + α₁ ln|ψ|² ψ + α₂ (argψ) ψ.
///
/// Natural units (ħ = m = 1) by default: ν₁,ν₂,μ₁…μ₅ carry length²/time,
/// α₁,α₂ carry 1/time, μ₀ the configured inverse action scale. ν₁ must not
/// vanish anywhere on the working window.
struct CoefficientVector {
    TimeFn nu1, nu2, mu0, mu1, mu2, mu3, mu4, mu5, alpha1, alpha2;

    /// Non-fatal notes attached by operations (e.g. one-sided boundary
    /// stencils used for a tabulated gauge parameter).
    std::vector<std::string> warnings;

    /// κ = μ₂ - ν₁/2 and ξ = μ₅ + ν₁/4, the bookkeeping used while building
    /// the family; μ₂ and μ₅ are canonical storage.
    TimeFn kappa() const { return mu2 - 0.5 * nu1; }
    TimeFn xi() const { return mu5 + 0.25 * nu1; }

    /// All ten entries constant in time.
    bool is_constant() const;

    /// Evaluates ν₁(t), throwing InvalidInputError when it (numerically)
    /// vanishes.
    double nu1_checked(double t) const;
};

/// A member of the linear family: i ∂t ψ = (ν₁Δ + μ₀V)ψ.
struct LinearMember {
    TimeFn nu1, mu0;
};

/// Embeds the linear member into the ten-coefficient family so that every
/// nonlinear bracket above vanishes: μ₂ = ν₁/2, μ₃ = -ν₁, μ₅ = -ν₁/4.
CoefficientVector embed_linear(const LinearMember& lin);

/// Action of the pure nonlinear subgroup (θ ≡ 0) on the coefficients:
/// linear on (ν₁,ν₂,μ₀,…,μ₅), affine on (α₁,α₂) through γ,Λ and their time
/// derivatives. Gauge invariants are preserved.
CoefficientVector act_on_coefficients(const GaugeElement& g, const CoefficientVector& c);

/// Gauge closure of the linear family: the coefficient vector obtained by
/// transforming the linear member with g, assembled from the closed-form
/// constrained-coefficient expressions (ν₁' = ν₁/Λ, μ₁' = -γν₁/Λ,
/// κ' = (γ²+Λ²-1)ν₁/(2Λ), ν₂' = μ₁'/2, α₁' = γΛ̇/(2Λ) - γ̇/2, α₂' = -Λ̇/Λ).
/// Agrees with act_on_coefficients(g, embed_linear(lin)).
CoefficientVector closure_coefficients(const LinearMember& lin, const GaugeElement& g);

} // namespace nlse
