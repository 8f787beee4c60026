#pragma once

#include <optional>
#include <string>

#include "nlse/coefficients.hpp"
#include "nlse/wavefunction.hpp"

namespace nlse {

/// Scalar potential V(x): zero, harmonic ½ω²x², or tabulated samples on the
/// grid. The gradient is analytic for the closed forms and a centered
/// difference for samples.
class Potential {
public:
    Potential() = default;

    static Potential zero();
    static Potential harmonic(double omega);
    static Potential from_samples(std::vector<double> values);

    bool is_zero() const { return kind_ == Kind::zero; }
    std::vector<double> sample(const GridSpec& grid) const;
    std::vector<double> gradient(const GridSpec& grid) const;

    enum class Kind { zero, harmonic, samples };
    Kind kind() const { return kind_; }
    double omega() const { return omega_; }
    const std::vector<double>& samples() const { return values_; }

private:
    Kind kind_ = Kind::zero;
    double omega_ = 1.0;
    std::vector<double> values_;
};

struct EvolutionSpec {
    CoefficientVector coefficients;
    Potential potential;
    GridSpec grid;
    double t0 = 0.0;
    double t1 = 1.0;
    /// Step size; non-positive selects the stability bound
    /// dt = 0.4·dx²/(2·max|ν₁|) (tightened further when ν₂ ≠ 0), rounded so
    /// the window divides evenly. A caller-provided dt above the bound is a
    /// ConfigError.
    double dt = 0.0;
    /// Record diagnostics every this many steps.
    int sample_stride = 10;
    /// Keep full snapshots every this many samples (0: endpoints only).
    int snapshot_stride = 0;
    FunctionalOptions functional_opts;
    UnwrapOptions unwrap_opts;
    double norm_drift_abort = 1e-3;
    double edge_mass_guard = 1e-10;
};

enum class RunStatus { ok, diverged, not_applicable, phase_branch_error };
std::string to_string(RunStatus status);

struct TrajectorySample {
    double t = 0.0;
    double norm = 0.0;
    double mean_x = 0.0;
    double mean_p = 0.0;
    /// ⟨-∂x V⟩ when a potential is present (NaN otherwise).
    double mean_force = 0.0;
    /// Relative continuity residual ∂tρ - [2ν₁∇·J + 2ν₂Δρ] from neighboring
    /// steps (NaN at the window endpoints).
    double continuity_resid = 0.0;
    /// Relative first-Ehrenfest residual d⟨x⟩/dt + 2ν₁⟨-i∇⟩ (NaN at the
    /// endpoints).
    double ehrenfest1_resid = 0.0;
};

struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
    std::vector<WaveFunction> snapshots;
    RunStatus status = RunStatus::ok;
    std::string message;
    std::vector<std::string> warnings;
    double dt = 0.0;

    const WaveFunction& final_state() const;
};

double stability_dt_bound(const CoefficientVector& c, const GridSpec& grid, double t0,
                          double t1);

/// ∂t ψ for the family equation (linear part kept explicit):
///   ∂t ψ = -i[(ν₁Δ + μ₀V)ψ + iν₂R₂ψ + μ₁R₁ψ + (μ₂-ν₁/2)R₂ψ + (μ₃+ν₁)R₃ψ
///              + μ₄R₄ψ + (μ₅+ν₁/4)R₅ψ + α₁ ln|ψ|² ψ + α₂ S ψ]
/// with S the unwrapped phase (branch seam pinned at the modulus minimum).
std::vector<cplx> rhs(const WaveFunction& psi, double t, const CoefficientVector& c,
                      const Potential& V, const FunctionalOptions& fopts = {},
                      const UnwrapOptions& uopts = {});

/// Same member assembled in the fully functional form
/// ∂t ψ = -i[iν₁R₁ψ + iν₂R₂ψ + Σ μ_k R_k ψ + μ₀Vψ + α₁ ln|ψ|² ψ + α₂ S ψ];
/// agrees with rhs() wherever ρ is above the regularization floor.
std::vector<cplx> rhs_natural(const WaveFunction& psi, double t, const CoefficientVector& c,
                              const Potential& V, const FunctionalOptions& fopts = {},
                              const UnwrapOptions& uopts = {});

/// Explicit fourth-order method-of-lines run; coefficients are sampled at the
/// stage times. Aborts with RunStatus::diverged when the norm drifts by more
/// than norm_drift_abort; PhaseBranchError from the Kostin term is reported
/// as RunStatus::phase_branch_error.
TrajectoryRecord run(const EvolutionSpec& spec, const WaveFunction& psi0);

} // namespace nlse
