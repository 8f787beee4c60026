#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "nlse/errors.hpp"

namespace nlse {

/// Closed t-interval on which a TimeFn may be evaluated. Closed-form kinds
/// are defined on all of R; tabulated kinds only inside their table range.
struct TimeDomain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double t) const;
    bool unbounded() const;
    TimeDomain intersect(const TimeDomain& other) const;
    bool empty() const { return lo > hi; }
};

enum class TimeFnKind { constant, linear, exponential, tabulated, composite };

namespace detail {
class TimeFnNode;
}

/// A real scalar function of time with an evaluable derivative.
///
/// Immutable value type: primitives are constant / linear / exponential /
/// tabulated; arithmetic on TimeFns builds composite expressions whose values
/// and derivatives are evaluated from the primitives (product and quotient
/// rules applied to the primitive derivatives, so algebraic cancellations
/// survive finite-difference derivatives of tabulated data). Constant
/// subexpressions are folded eagerly.
class TimeFn {
public:
    TimeFn(); // zero

    static TimeFn constant(double value);
    /// slope*t + intercept
    static TimeFn linear(double slope, double intercept);
    /// amplitude * exp(rate*t)
    static TimeFn exponential(double amplitude, double rate);
    /// Samples values[i] at t0 + i*dt, linear interpolation between nodes;
    /// requires >= 3 samples and dt > 0.
    static TimeFn tabulated(double t0, double dt, std::vector<double> values);
    static TimeFn zero() { return constant(0.0); }
    static TimeFn one() { return constant(1.0); }

    double value(double t) const;
    double operator()(double t) const { return value(t); }
    double derivative(double t) const;
    /// The derivative as a TimeFn (analytic for closed forms, second-order
    /// finite differences on the nodes for tabulated data).
    TimeFn derivative_fn() const;

    TimeDomain domain() const;
    TimeFnKind kind() const;
    bool is_constant() const { return kind() == TimeFnKind::constant; }
    /// Requires is_constant().
    double constant_value() const;
    /// True if any primitive in the expression is tabulated (its derivative
    /// uses one-sided stencils at the table ends).
    bool contains_tabulated() const;

    /// Primitive parameter access for serialization. Only meaningful for the
    /// matching kind.
    double linear_slope() const;
    double linear_intercept() const;
    double exp_amplitude() const;
    double exp_rate() const;
    double table_t0() const;
    double table_dt() const;
    const std::vector<double>& table_values() const;

    friend TimeFn operator+(const TimeFn& a, const TimeFn& b);
    friend TimeFn operator-(const TimeFn& a, const TimeFn& b);
    friend TimeFn operator*(const TimeFn& a, const TimeFn& b);
    friend TimeFn operator/(const TimeFn& a, const TimeFn& b);
    friend TimeFn operator-(const TimeFn& a);
    friend TimeFn operator+(double a, const TimeFn& b) { return TimeFn::constant(a) + b; }
    friend TimeFn operator+(const TimeFn& a, double b) { return a + TimeFn::constant(b); }
    friend TimeFn operator-(double a, const TimeFn& b) { return TimeFn::constant(a) - b; }
    friend TimeFn operator-(const TimeFn& a, double b) { return a - TimeFn::constant(b); }
    friend TimeFn operator*(double a, const TimeFn& b) { return TimeFn::constant(a) * b; }
    friend TimeFn operator*(const TimeFn& a, double b) { return a * TimeFn::constant(b); }
    friend TimeFn operator/(const TimeFn& a, double b) { return a / TimeFn::constant(b); }
    friend TimeFn operator/(double a, const TimeFn& b) { return TimeFn::constant(a) / b; }

private:
    explicit TimeFn(std::shared_ptr<const detail::TimeFnNode> node);
    std::shared_ptr<const detail::TimeFnNode> node_;
};

} // namespace nlse
