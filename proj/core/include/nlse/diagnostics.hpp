#pragma once

#include "nlse/evolution.hpp"
#include "nlse/invariants.hpp"

namespace nlse {

/// Relative residual of ∂tρ = 2ν₁∇·J + 2ν₂Δρ at the middle snapshot, with
/// ∂tρ by centered difference of the outer snapshots (which must be equally
/// spaced). Normalized by ||∂tρ|| + ||rhs|| + ||ρ||, the last term acting as
/// a unit-rate floor so stationary densities report ~0.
double continuity_residual(const WaveFunction& before, const WaveFunction& mid,
                           const WaveFunction& after, const CoefficientVector& c);

/// Per-interior-snapshot residual series for a trajectory's snapshot list.
std::vector<double> continuity_residual_series(const std::vector<WaveFunction>& snapshots,
                                               const CoefficientVector& c);

struct EhrenfestReport {
    RunStatus status = RunStatus::ok;
    /// max over interior samples of |d⟨x⟩/dt + 2ν₁⟨-i∇⟩| / max|⟨-i∇⟩|.
    double relation1_max_resid = 0.0;
    /// Second relation d²⟨x⟩/dt² = -2ι₀⟨-∇V⟩ + ι₇ d⟨x⟩/dt, evaluated only on
    /// the F₁ subfamily; the residual is also reported with the opposite
    /// friction sign (see alt), and marked not-applicable otherwise.
    bool relation2_applicable = false;
    double relation2_max_resid = 0.0;
    double relation2_max_resid_alt = 0.0;
    FamilyTag family = FamilyTag::Unclassified;
};

EhrenfestReport ehrenfest_check(const TrajectoryRecord& record, const CoefficientVector& c,
                                TimeWindow window, ClassifyOptions copts = {});

/// Least-squares exponential rate of |v(t)|: fits ln|v| = a + r·t, returns r.
double fit_exponential_rate(const std::vector<double>& ts, const std::vector<double>& vs);

struct CommutingReport {
    RunStatus status = RunStatus::ok;
    std::string message;
    /// max_i |ρ_A(x_i) - ρ_B(x_i)| between evolve-then-transform (A) and
    /// transform-then-evolve (B).
    double max_density_mismatch = 0.0;
    /// max deviation of the pointwise phase difference from its value at the
    /// density peak, over the bulk (ρ ≥ 1e-8 max ρ).
    double max_phase_mismatch = 0.0;
};

/// Both routes around the equivalence square for the linearizable family.
CommutingReport commuting_diagram(const LinearMember& lin, const GaugeElement& g,
                                  const WaveFunction& psi0, double T,
                                  const EvolutionSpec& base);

struct BoostReport {
    RunStatus status = RunStatus::ok;
    std::string message;
    double max_density_mismatch = 0.0;
};

/// Galilei boost spot check for V = 0 members with ι₃ = ι₄ = ι₇ = 0 and
/// time-independent invariants: compares evolve-after-boost against
/// boost-after-evolve with the phase cocycle exp(i(βx + ν₁β²t)), β = -v/(2ν₁).
BoostReport boost_check(const EvolutionSpec& spec, const WaveFunction& psi0, double v,
                        ClassifyOptions copts = {});

} // namespace nlse
