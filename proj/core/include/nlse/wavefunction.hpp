#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nlse/gauge.hpp"
#include "nlse/grid.hpp"

namespace nlse {

using cplx = std::complex<double>;

/// Complex samples on a periodic uniform grid with a time tag. Immutable
/// snapshot; operations allocate results.
class WaveFunction {
public:
    WaveFunction(GridSpec grid, std::vector<cplx> values, double time_tag = 0.0);

    const GridSpec& grid() const { return grid_; }
    const std::vector<cplx>& values() const { return values_; }
    double time_tag() const { return time_tag_; }

    /// sqrt(Σ|ψ_i|² dx)
    double norm() const;
    WaveFunction normalized() const;
    WaveFunction with_time_tag(double t) const;

private:
    GridSpec grid_;
    std::vector<cplx> values_;
    double time_tag_;
};

/// Normalized packet |ψ| = (π s²)^{-1/4} exp(-(x-x0)²/(2s²)), phase k0·x.
WaveFunction gaussian_packet(const GridSpec& grid, double x0, double s, double k0 = 0.0);
/// Periodized variant (images at x ± L summed in), exactly smooth on the box.
WaveFunction periodized_gaussian(const GridSpec& grid, double x0, double s, double k0 = 0.0);
/// e^{ikx}/sqrt(L) with k = 2π·mode/L.
WaveFunction plane_wave(const GridSpec& grid, int mode);

/// ρ = |ψ|² pointwise and J = Im(ψ̄ ∂x ψ) with the spectral first derivative.
struct DensityCurrent {
    std::vector<double> rho;
    std::vector<double> current;
};
DensityCurrent density_current(const WaveFunction& psi);

struct FunctionalOptions {
    /// Divisions by ρ use ρ + eps_reg_scale·max ρ; the same floor guards
    /// ln|ψ|².
    double eps_reg_scale = 1e-12;
};

/// The five degree-zero functionals R₁ = ∇·J/ρ, R₂ = Δρ/ρ, R₃ = J²/ρ²,
/// R₄ = J·∇ρ/ρ², R₅ = (∇ρ)²/ρ², assembled from spectral derivatives of ψ
/// (∇·J = Im(ψ̄Δψ), Δρ = 2Re(ψ̄Δψ)+2|∇ψ|², ∇ρ = 2Re(ψ̄∇ψ)).
struct FieldDiagnostics {
    std::vector<double> rho;
    std::vector<double> current;
    std::vector<double> r1, r2, r3, r4, r5;
    bool regularized = false; ///< some point fell below the ρ floor
    double eps_reg = 0.0;     ///< the floor that was applied
};
FieldDiagnostics functionals(const WaveFunction& psi, const FunctionalOptions& opts = {});

struct UnwrapOptions {
    /// Minimum modulus for a usable phase, relative to max|ψ|.
    double eps_phase_scale = 1e-8;
};

struct UnwrapResult {
    std::vector<double> phase;
    /// Branch mismatch across the periodic wrap, in units of 2π (metadata,
    /// not an error).
    int winding = 0;
};

/// Continuous phase branch anchored at the leftmost grid point (principal
/// value there); successive differences in (-π, π]. Throws PhaseBranchError
/// when min|ψ| < eps_phase·max|ψ|.
UnwrapResult unwrap_phase(const WaveFunction& psi, const UnwrapOptions& opts = {});

/// Unwrap for localized states: the branch seam is placed at the point of
/// minimum modulus, increments across sub-threshold regions are frozen, and
/// the branch is anchored at the modulus peak. Requires no exact zeros.
UnwrapResult unwrap_phase_masked(const WaveFunction& psi, const UnwrapOptions& opts = {});

/// ψ ↦ |ψ| exp[i(γ(t) ln|ψ| + Λ(t)·argψ + θ(x,t))]. For Λ(t) = ±1 no phase
/// unwrapping is involved (Λ = -1, γ = 0, θ = 0 is complex conjugation);
/// otherwise the continuous branch from unwrap_phase is used. Zero-modulus
/// samples map to zero.
WaveFunction apply_gauge(const GaugeElement& g, const WaveFunction& psi, double t,
                         const UnwrapOptions& opts = {});

/// Half-open index interval [lo, hi).
struct IndexInterval {
    int lo = 0;
    int hi = 0;
};

/// Projection onto the region B (union of intervals), renormalized:
/// values zeroed outside B, scaled so the result has unit norm.
WaveFunction measure_project(const WaveFunction& psi, const std::vector<IndexInterval>& region);

double mean_x(const WaveFunction& psi);
double variance_x(const WaveFunction& psi);
/// ⟨-i∂x⟩ = ∫ J dx (spectral current).
double mean_p(const WaveFunction& psi);
/// Probability mass in the outermost `band` cells on each side.
double edge_mass(const WaveFunction& psi, int band = 4);

namespace detail {
/// Shared field assembly (also used by the time stepper): spectral ∇ψ, Δψ,
/// then pointwise ρ, J, ∇·J, Δρ, ∇ρ.
struct FieldArrays {
    std::vector<cplx> dpsi, ddpsi;
    std::vector<double> rho, current, div_current, lap_rho, grad_rho;
};
void assemble_fields(const GridSpec& grid, std::span<const cplx> psi, FieldArrays& out);
} // namespace detail

} // namespace nlse
