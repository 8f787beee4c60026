#include "nlse/gauge.hpp"

#include <cmath>

namespace nlse {

struct SpaceTimeField::Impl {
    std::function<double(double, double)> fn;
    bool zero = false;
    std::string descriptor;
};

SpaceTimeField::SpaceTimeField() : SpaceTimeField(zero().impl_) {}
SpaceTimeField::SpaceTimeField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

SpaceTimeField SpaceTimeField::zero() {
    auto impl = std::make_shared<Impl>();
    impl->fn = [](double, double) { return 0.0; };
    impl->zero = true;
    return SpaceTimeField(std::move(impl));
}

SpaceTimeField SpaceTimeField::separable(std::function<double(double)> space, TimeFn time) {
    auto impl = std::make_shared<Impl>();
    impl->fn = [space = std::move(space), time](double x, double t) {
        return space(x) * time.value(t);
    };
    return SpaceTimeField(std::move(impl));
}

SpaceTimeField SpaceTimeField::from_function(std::function<double(double, double)> fn) {
    auto impl = std::make_shared<Impl>();
    impl->fn = std::move(fn);
    return SpaceTimeField(std::move(impl));
}

double SpaceTimeField::value(double x, double t) const { return impl_->fn(x, t); }
bool SpaceTimeField::is_zero() const { return impl_->zero; }
const std::string& SpaceTimeField::descriptor() const { return impl_->descriptor; }

SpaceTimeField SpaceTimeField::with_descriptor(std::string descriptor_json) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->descriptor = std::move(descriptor_json);
    return SpaceTimeField(std::move(impl));
}

SpaceTimeField operator+(const SpaceTimeField& a, const SpaceTimeField& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto impl = std::make_shared<SpaceTimeField::Impl>();
    impl->fn = [a, b](double x, double t) { return a.value(x, t) + b.value(x, t); };
    return SpaceTimeField(std::move(impl));
}

SpaceTimeField scale(const TimeFn& c, const SpaceTimeField& f) {
    if (f.is_zero()) return f;
    if (c.is_constant()) {
        const double v = c.constant_value();
        if (v == 0.0) return SpaceTimeField::zero();
        if (v == 1.0) return f;
    }
    auto impl = std::make_shared<SpaceTimeField::Impl>();
    impl->fn = [c, f](double x, double t) { return c.value(t) * f.value(x, t); };
    return SpaceTimeField(std::move(impl));
}

GaugeElement::GaugeElement(TimeFn gamma, TimeFn lambda, SpaceTimeField theta)
    : gamma_(std::move(gamma)), lambda_(std::move(lambda)), theta_(std::move(theta)) {
    if (lambda_.is_constant() && lambda_.constant_value() == 0.0)
        throw InvalidElementError("degenerate gauge element: Lambda = 0");
    if (gamma_.domain().intersect(lambda_.domain()).empty())
        throw TimeDomainError("gamma and Lambda have disjoint time domains");
}

GaugeElement GaugeElement::identity() {
    return GaugeElement(TimeFn::zero(), TimeFn::one());
}

double GaugeElement::lambda_checked(double t) const {
    const double v = lambda_.value(t);
    if (v == 0.0 || !std::isfinite(v))
        throw InvalidElementError("degenerate gauge element: Lambda(t) = 0");
    return v;
}

TimeDomain GaugeElement::domain() const {
    return gamma_.domain().intersect(lambda_.domain());
}

GaugeElement compose(const GaugeElement& a, const GaugeElement& b) {
    return GaugeElement(a.gamma() + a.lambda() * b.gamma(),
                        a.lambda() * b.lambda(),
                        a.theta() + scale(a.lambda(), b.theta()));
}

GaugeElement inverse(const GaugeElement& a) {
    TimeFn inv_lambda = TimeFn::one() / a.lambda();
    return GaugeElement(-(a.gamma() / a.lambda()), inv_lambda,
                        scale(-inv_lambda, a.theta()));
}

std::array<std::array<double, 3>, 3> matrix_rep(const GaugeElement& a, double t, double x) {
    const double L = a.lambda_checked(t);
    const double g = a.gamma().value(t);
    const double th = a.theta().value(x, t);
    return {{{1.0, 0.0, 0.0}, {th, L, 0.0}, {g, 0.0, L}}};
}

AffineGaugeElement::AffineGaugeElement(KFunction k, LambdaFunction lambda)
    : k_(std::move(k)), lambda_(std::move(lambda)) {
    if (!k_ || !lambda_) throw InvalidElementError("affine gauge element requires k and lambda");
}

AffineGaugeElement AffineGaugeElement::identity() {
    return AffineGaugeElement([](double, double, double) { return 0.0; },
                              [](double, double) { return 1.0; });
}

AffineGaugeElement AffineGaugeElement::from_gauge(const GaugeElement& g) {
    const TimeFn gamma = g.gamma();
    const TimeFn lambda = g.lambda();
    const SpaceTimeField theta = g.theta();
    return AffineGaugeElement(
        [gamma, theta](double modulus, double x, double t) {
            return gamma.value(t) * std::log(modulus) + theta.value(x, t);
        },
        [lambda](double, double t) { return lambda.value(t); });
}

double AffineGaugeElement::lambda(double x, double t) const {
    const double v = lambda_(x, t);
    if (v == 0.0 || !std::isfinite(v))
        throw InvalidElementError("degenerate affine element: lambda(x,t) = 0");
    return v;
}

AffineGaugeElement compose_affine(const AffineGaugeElement& a, const AffineGaugeElement& b) {
    return AffineGaugeElement(
        [a, b](double modulus, double x, double t) {
            return a.k(modulus, x, t) + b.k(modulus, x, t) * a.lambda(x, t);
        },
        [a, b](double x, double t) { return a.lambda(x, t) * b.lambda(x, t); });
}

AffineGaugeElement inverse_affine(const AffineGaugeElement& a) {
    return AffineGaugeElement(
        [a](double modulus, double x, double t) {
            return -a.k(modulus, x, t) / a.lambda(x, t);
        },
        [a](double x, double t) { return 1.0 / a.lambda(x, t); });
}

std::array<std::array<double, 2>, 2> matrix_rep_affine(const AffineGaugeElement& a,
                                                       double modulus, double x, double t) {
    return {{{1.0, 0.0}, {a.k(modulus, x, t), a.lambda(x, t)}}};
}

} // namespace nlse
