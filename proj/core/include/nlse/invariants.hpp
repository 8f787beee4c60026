#pragma once

#include <array>
#include <string>

#include "nlse/coefficients.hpp"

namespace nlse {

/// The eight gauge-invariant parameters:
///   ι₀ = ν₁μ₀              ι₁ = ν₁μ₂ - ν₂μ₁        ι₂ = μ₁ - 2ν₂
///   ι₃ = 1 + μ₃/ν₁          ι₄ = μ₄ - μ₁μ₃/ν₁
///   ι₅ = ν₁(μ₂+2μ₅) - ν₂(μ₁+2μ₄) + 2ν₂²μ₃/ν₁
///   ι₆ = ν₁α₁ - ν₂α₂ + ν₂ν̇₁/ν₁ - ν̇₂     ι₇ = α₂ - ν̇₁/ν₁
/// Unchanged under act_on_coefficients for every gauge element.
struct InvariantVector {
    std::array<TimeFn, 8> iota;

    const TimeFn& operator[](size_t k) const { return iota[k]; }
    std::array<double, 8> values(double t) const;
};

InvariantVector invariants(const CoefficientVector& c);

enum class FamilyTag { F0, F1, F3, F5, R0, R1, R3, R5, Unclassified };
std::string to_string(FamilyTag tag);

struct TimeWindow {
    double t0 = 0.0;
    double t1 = 1.0;
};

struct ClassifyOptions {
    /// An invariant counts as zero when its max |value| over the window is
    /// below eps_rel times the scale of ι₀ (or 1 when ι₀ vanishes).
    double eps_rel = 1e-9;
    int samples = 33;
};

/// Smallest family of the chain F₀ ⊂ F₁ ⊂ F₃ ⊂ F₅ whose zero pattern the
/// invariants match over the window:
///   F₀: ι₂=…=ι₇=0,  F₁: ι₂=…=ι₅=0,  F₃: ι₃=ι₄=0,  F₅: unconstrained.
FamilyTag classify(const InvariantVector& iv, TimeWindow window, ClassifyOptions opts = {});

/// Classification under the restricted group (Λ ≡ 1): requires ν₁, μ₀
/// constant and α₂ ≡ 0, then matches the chain R₀ ⊂ R₁ ⊂ R₃ ⊂ R₅ on
/// (ι₂,…,ι₆):
///   R₀: ι₂=…=ι₆=0,  R₁: ι₂=…=ι₅=0,  R₃: ι₃=ι₄=0,  R₅: unconstrained.
/// Returns Unclassified when the membership preconditions fail.
FamilyTag classify_restricted(const CoefficientVector& c, TimeWindow window,
                              ClassifyOptions opts = {});

} // namespace nlse
