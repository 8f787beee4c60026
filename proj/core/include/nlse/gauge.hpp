#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nlse/time_fn.hpp"

namespace nlse {

/// Real scalar field θ(x,t). Immutable; zero is tracked structurally so the
/// pure nonlinear subgroup (θ ≡ 0) can be recognized exactly through
/// composition and inversion.
class SpaceTimeField {
public:
    SpaceTimeField(); // zero

    static SpaceTimeField zero();
    /// space(x) * time(t)
    static SpaceTimeField separable(std::function<double(double)> space, TimeFn time);
    static SpaceTimeField from_function(std::function<double(double, double)> fn);

    double value(double x, double t) const;
    double operator()(double x, double t) const { return value(x, t); }
    bool is_zero() const;

    /// Opaque serialization descriptor (JSON text) attached by the factories
    /// in serialize.hpp; empty for fields built from bare callables.
    const std::string& descriptor() const;
    SpaceTimeField with_descriptor(std::string descriptor_json) const;

    friend SpaceTimeField operator+(const SpaceTimeField& a, const SpaceTimeField& b);
    /// Pointwise product c(t) * f(x,t).
    friend SpaceTimeField scale(const TimeFn& c, const SpaceTimeField& f);

private:
    struct Impl;
    explicit SpaceTimeField(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Group element (γ(t), Λ(t), θ(x,t)). Identity is (0, 1, 0); Λ must not
/// vanish on the working domain.
class GaugeElement {
public:
    GaugeElement(TimeFn gamma, TimeFn lambda, SpaceTimeField theta = SpaceTimeField::zero());

    static GaugeElement identity();

    const TimeFn& gamma() const { return gamma_; }
    const TimeFn& lambda() const { return lambda_; }
    const SpaceTimeField& theta() const { return theta_; }
    bool theta_is_zero() const { return theta_.is_zero(); }

    /// Evaluates Λ(t), throwing InvalidElementError if it is (numerically) zero.
    double lambda_checked(double t) const;

    TimeDomain domain() const;

private:
    TimeFn gamma_, lambda_;
    SpaceTimeField theta_;
};

/// a ∘ b, i.e. apply b first: (γ_a + Λ_a γ_b, Λ_a Λ_b, θ_a + Λ_a θ_b).
GaugeElement compose(const GaugeElement& a, const GaugeElement& b);

/// (−γ/Λ, 1/Λ, −θ/Λ); compose(a, inverse(a)) is the identity.
GaugeElement inverse(const GaugeElement& a);

/// Lower-triangular 3x3 representation, rows (1,0,0), (θ,Λ,0), (γ,0,Λ);
/// θ evaluated at (x,t). matrix_rep(compose(a,b)) = matrix_rep(a)·matrix_rep(b).
std::array<std::array<double, 3>, 3> matrix_rep(const GaugeElement& a, double t,
                                                double x = 0.0);

/// Element of the larger (k,λ) group: phase map k(|ψ|,x,t) + λ(x,t)·argψ.
/// λ must not vanish. Composition follows the same orientation as compose():
/// apply b first.
class AffineGaugeElement {
public:
    using KFunction = std::function<double(double modulus, double x, double t)>;
    using LambdaFunction = std::function<double(double x, double t)>;

    AffineGaugeElement(KFunction k, LambdaFunction lambda);

    static AffineGaugeElement identity();
    /// Restriction of a (γ,Λ,θ) element: k = γ(t) ln|ψ| + θ(x,t), λ = Λ(t).
    static AffineGaugeElement from_gauge(const GaugeElement& g);

    double k(double modulus, double x, double t) const { return k_(modulus, x, t); }
    double lambda(double x, double t) const;

private:
    KFunction k_;
    LambdaFunction lambda_;
};

AffineGaugeElement compose_affine(const AffineGaugeElement& a, const AffineGaugeElement& b);
AffineGaugeElement inverse_affine(const AffineGaugeElement& a);

/// 2x2 affine representation, rows (1,0), (k,λ) with k evaluated at
/// (modulus,x,t) and λ at (x,t).
std::array<std::array<double, 2>, 2> matrix_rep_affine(const AffineGaugeElement& a,
                                                       double modulus, double x, double t);

} // namespace nlse
