#pragma once

#include <string>

#include "nlse/coefficients.hpp"

namespace nlse {

enum class PresetName { Linear, BM, Kostin, DG, GuerraPusterla };

PresetName preset_from_string(const std::string& name);
std::string to_string(PresetName name);

/// Physical constants for the historical members. Natural units by default.
struct PresetParams {
    double hbar = 1.0;
    double mass = 1.0;
    double b = 0.0;  ///< logarithmic coupling (BM)
    double f = 0.0;  ///< friction constant (Kostin)
    double D = 0.0;  ///< diffusion coefficient
    double Dprime = 1.0;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0;
};

/// Historical members as points of the ten-parameter family, with the sign
/// convention ν₁ = -ħ/2m applied uniformly:
///   Linear:          ν₁=-ħ/2m, μ₀=1/ħ, μ₂=ν₁/2, μ₃=-ν₁, μ₅=-ν₁/4
///   BM:              Linear + α₁ = -b/ħ
///   Kostin:          Linear + α₂ = f/m
///   DG:              ν₂=ħD/2, μ₁=ħD'c₁, μ₂=ħD'c₂+ν₁/2, μ₃=ħD'c₃-ν₁,
///                    μ₄=ħD'c₄, μ₅=ħD'c₅-ν₁/4
///   GuerraPusterla:  DG with D=0, c₁=c₃=c₄=0, c₅=-c₂/2
CoefficientVector preset(PresetName name, const PresetParams& params = {});

} // namespace nlse
