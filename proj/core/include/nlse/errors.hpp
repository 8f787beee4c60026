#pragma once

#include <stdexcept>
#include <string>

namespace nlse {

/// Evaluation outside the declared time domain of a tabulated function,
/// or composition of functions with disjoint domains.
struct TimeDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degenerate gauge element (Λ = 0 or λ(x,t) = 0).
struct InvalidElementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operation preconditions on inputs violated (ν₁ = 0, θ ≠ 0 where the pure
/// nonlinear subgroup is required, mismatched grids, ...).
struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invariant evaluation at a zero crossing of ν₁.
struct SingularInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No continuous phase branch available (modulus below the unwrap threshold).
struct PhaseBranchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Measurement region carries no probability.
struct EmptyRegionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// NaN/Inf encountered after regularization.
struct NumericalDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad run configuration (schema violation, unstable dt, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nlse
