#pragma once

#include <cstdint>

#include "nlse/sampling.hpp"

namespace nlse {

/// Randomized group-axiom suite over triples of gauge elements: associativity
/// and inverse law of the composition, and the 3x3 matrix homomorphism, all
/// evaluated at sampled times. Reports worst absolute errors.
struct AlgebraSuiteReport {
    int triples = 0;
    double max_associativity_err = 0.0;
    double max_inverse_err = 0.0;
    double max_matrix_hom_err = 0.0;
    double elapsed_seconds = 0.0;
};
AlgebraSuiteReport verify_algebra(std::uint64_t seed, int triples,
                                  const SamplingOptions& opts = {});

/// Randomized invariance suite over (coefficient vector, gauge element)
/// pairs: all eight invariants preserved under the coefficient action.
/// Reports the worst relative error (|Δι| / max(|ι|, |ι'|, 1e-6)).
struct InvarianceSuiteReport {
    int pairs = 0;
    double max_relative_err = 0.0;
    double elapsed_seconds = 0.0;
};
InvarianceSuiteReport verify_invariance(std::uint64_t seed, int pairs,
                                        const SamplingOptions& opts = {});

/// Numerical rank of the Jacobian of (γ,Λ) ↦ acted (ν,μ) coefficients at a
/// generic point: returns the two singular values of the 8x2 Jacobian.
struct OrbitRankReport {
    double sigma1 = 0.0;
    double sigma2 = 0.0;
};
OrbitRankReport orbit_jacobian_rank(const CoefficientVector& c, double gamma, double lambda,
                                    double t);

} // namespace nlse
