#include "nlse/time_fn.hpp"

#include <cmath>
#include <cstdio>

namespace nlse {

bool TimeDomain::contains(double t) const {
    // Small slack so table endpoints survive rounding in t arithmetic.
    const double span = std::isfinite(hi - lo) ? hi - lo : 1.0;
    const double eps = 1e-12 * std::max(1.0, std::abs(span));
    return t >= lo - eps && t <= hi + eps;
}

bool TimeDomain::unbounded() const {
    return !std::isfinite(lo) && !std::isfinite(hi);
}

TimeDomain TimeDomain::intersect(const TimeDomain& other) const {
    return {std::max(lo, other.lo), std::min(hi, other.hi)};
}

namespace detail {

class TimeFnNode {
public:
    virtual ~TimeFnNode() = default;
    virtual double value(double t) const = 0;
    virtual double derivative(double t) const = 0;
    virtual std::shared_ptr<const TimeFnNode> derivative_node() const = 0;
    virtual TimeDomain domain() const { return {}; }
    virtual TimeFnKind kind() const { return TimeFnKind::composite; }
    virtual bool contains_tabulated() const { return false; }
};

namespace {

[[noreturn]] void throw_outside(double t, const TimeDomain& d) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "time %.17g outside declared domain [%.17g, %.17g]", t, d.lo, d.hi);
    throw TimeDomainError(buf);
}

class ConstantNode final : public TimeFnNode {
public:
    explicit ConstantNode(double v) : v_(v) {}
    double value(double) const override { return v_; }
    double derivative(double) const override { return 0.0; }
    std::shared_ptr<const TimeFnNode> derivative_node() const override {
        return std::make_shared<ConstantNode>(0.0);
    }
    TimeFnKind kind() const override { return TimeFnKind::constant; }
    double v_;
};

class LinearNode final : public TimeFnNode {
public:
    LinearNode(double slope, double intercept) : slope_(slope), intercept_(intercept) {}
    double value(double t) const override { return slope_ * t + intercept_; }
    double derivative(double) const override { return slope_; }
    std::shared_ptr<const TimeFnNode> derivative_node() const override {
        return std::make_shared<ConstantNode>(slope_);
    }
    TimeFnKind kind() const override { return TimeFnKind::linear; }
    double slope_, intercept_;
};

class ExponentialNode final : public TimeFnNode {
public:
    ExponentialNode(double amplitude, double rate) : amplitude_(amplitude), rate_(rate) {}
    double value(double t) const override { return amplitude_ * std::exp(rate_ * t); }
    double derivative(double t) const override { return rate_ * value(t); }
    std::shared_ptr<const TimeFnNode> derivative_node() const override {
        return std::make_shared<ExponentialNode>(amplitude_ * rate_, rate_);
    }
    TimeFnKind kind() const override { return TimeFnKind::exponential; }
    double amplitude_, rate_;
};

class TabulatedNode final : public TimeFnNode {
public:
    TabulatedNode(double t0, double dt, std::vector<double> values)
        : t0_(t0), dt_(dt), values_(std::move(values)) {
        if (values_.size() < 3)
            throw InvalidInputError("tabulated TimeFn requires at least 3 samples");
        if (!(dt_ > 0.0))
            throw InvalidInputError("tabulated TimeFn requires dt > 0");
    }

    double value(double t) const override {
        const TimeDomain d = domain();
        if (!d.contains(t)) throw_outside(t, d);
        const double s = (t - t0_) / dt_;
        const auto n = static_cast<long>(values_.size());
        long i = static_cast<long>(std::floor(s));
        if (i < 0) i = 0;
        if (i > n - 2) i = n - 2;
        const double w = s - static_cast<double>(i);
        return values_[static_cast<size_t>(i)] * (1.0 - w) +
               values_[static_cast<size_t>(i + 1)] * w;
    }

    // Second-order stencils on the nodes, linearly interpolated in between.
    double derivative(double t) const override {
        const TimeDomain d = domain();
        if (!d.contains(t)) throw_outside(t, d);
        const double s = (t - t0_) / dt_;
        const auto n = static_cast<long>(values_.size());
        long i = static_cast<long>(std::floor(s));
        if (i < 0) i = 0;
        if (i > n - 2) i = n - 2;
        const double w = s - static_cast<double>(i);
        return node_derivative(i) * (1.0 - w) + node_derivative(i + 1) * w;
    }

    std::shared_ptr<const TimeFnNode> derivative_node() const override {
        std::vector<double> d(values_.size());
        for (long i = 0; i < static_cast<long>(values_.size()); ++i)
            d[static_cast<size_t>(i)] = node_derivative(i);
        return std::make_shared<TabulatedNode>(t0_, dt_, std::move(d));
    }

    TimeDomain domain() const override {
        return {t0_, t0_ + dt_ * static_cast<double>(values_.size() - 1)};
    }
    TimeFnKind kind() const override { return TimeFnKind::tabulated; }
    bool contains_tabulated() const override { return true; }

    double t0_, dt_;
    std::vector<double> values_;

private:
    double node_derivative(long i) const {
        const auto n = static_cast<long>(values_.size());
        const auto v = [&](long j) { return values_[static_cast<size_t>(j)]; };
        if (i == 0) return (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * dt_);
        if (i == n - 1) return (3.0 * v(n - 1) - 4.0 * v(n - 2) + v(n - 3)) / (2.0 * dt_);
        return (v(i + 1) - v(i - 1)) / (2.0 * dt_);
    }
};

class BinaryNode : public TimeFnNode {
public:
    BinaryNode(std::shared_ptr<const TimeFnNode> a, std::shared_ptr<const TimeFnNode> b)
        : a_(std::move(a)), b_(std::move(b)) {}
    TimeDomain domain() const override { return a_->domain().intersect(b_->domain()); }
    bool contains_tabulated() const override {
        return a_->contains_tabulated() || b_->contains_tabulated();
    }
    std::shared_ptr<const TimeFnNode> a_, b_;
};

std::shared_ptr<const TimeFnNode> make_sum(std::shared_ptr<const TimeFnNode> a,
                                           std::shared_ptr<const TimeFnNode> b);
std::shared_ptr<const TimeFnNode> make_product(std::shared_ptr<const TimeFnNode> a,
                                               std::shared_ptr<const TimeFnNode> b);
std::shared_ptr<const TimeFnNode> make_quotient(std::shared_ptr<const TimeFnNode> a,
                                                std::shared_ptr<const TimeFnNode> b);

class SumNode final : public BinaryNode {
public:
    using BinaryNode::BinaryNode;
    double value(double t) const override { return a_->value(t) + b_->value(t); }
    double derivative(double t) const override {
        return a_->derivative(t) + b_->derivative(t);
    }
    std::shared_ptr<const TimeFnNode> derivative_node() const override {
        return make_sum(a_->derivative_node(), b_->derivative_node());
    }
};

class ProductNode final : public BinaryNode {
public:
    using BinaryNode::BinaryNode;
    double value(double t) const override { return a_->value(t) * b_->value(t); }
    double derivative(double t) const override {
        return a_->derivative(t) * b_->value(t) + a_->value(t) * b_->derivative(t);
    }
    std::shared_ptr<const TimeFnNode> derivative_node() const override {
        return make_sum(make_product(a_->derivative_node(), b_),
                        make_product(a_, b_->derivative_node()));
    }
};

class QuotientNode final : public BinaryNode {
public:
    using BinaryNode::BinaryNode;
    double value(double t) const override {
        const double den = b_->value(t);
        if (den == 0.0) throw SingularInvariantError("division by zero TimeFn value");
        return a_->value(t) / den;
    }
    double derivative(double t) const override {
        const double den = b_->value(t);
        if (den == 0.0) throw SingularInvariantError("division by zero TimeFn value");
        return (a_->derivative(t) * den - a_->value(t) * b_->derivative(t)) / (den * den);
    }
    std::shared_ptr<const TimeFnNode> derivative_node() const override {
        auto num = make_sum(make_product(a_->derivative_node(), b_),
                            make_product(make_product(std::make_shared<ConstantNode>(-1.0), a_),
                                         b_->derivative_node()));
        return make_quotient(num, make_product(b_, b_));
    }
};

bool is_const(const std::shared_ptr<const TimeFnNode>& n, double* v = nullptr) {
    if (auto c = dynamic_cast<const ConstantNode*>(n.get())) {
        if (v) *v = c->v_;
        return true;
    }
    return false;
}

void check_overlap(const TimeFnNode& a, const TimeFnNode& b) {
    if (a.domain().intersect(b.domain()).empty())
        throw TimeDomainError("combined TimeFns have disjoint time domains");
}

std::shared_ptr<const TimeFnNode> make_sum(std::shared_ptr<const TimeFnNode> a,
                                           std::shared_ptr<const TimeFnNode> b) {
    double va, vb;
    if (is_const(a, &va) && is_const(b, &vb)) return std::make_shared<ConstantNode>(va + vb);
    if (is_const(a, &va) && va == 0.0) return b;
    if (is_const(b, &vb) && vb == 0.0) return a;
    check_overlap(*a, *b);
    return std::make_shared<SumNode>(std::move(a), std::move(b));
}

std::shared_ptr<const TimeFnNode> make_product(std::shared_ptr<const TimeFnNode> a,
                                               std::shared_ptr<const TimeFnNode> b) {
    double va, vb;
    if (is_const(a, &va) && is_const(b, &vb)) return std::make_shared<ConstantNode>(va * vb);
    if (is_const(a, &va)) {
        if (va == 0.0) return std::make_shared<ConstantNode>(0.0);
        if (va == 1.0) return b;
    }
    if (is_const(b, &vb)) {
        if (vb == 0.0) return std::make_shared<ConstantNode>(0.0);
        if (vb == 1.0) return a;
    }
    check_overlap(*a, *b);
    return std::make_shared<ProductNode>(std::move(a), std::move(b));
}

std::shared_ptr<const TimeFnNode> make_quotient(std::shared_ptr<const TimeFnNode> a,
                                                std::shared_ptr<const TimeFnNode> b) {
    double va, vb;
    if (is_const(b, &vb)) {
        if (vb == 0.0) throw SingularInvariantError("division by constant zero TimeFn");
        if (is_const(a, &va)) return std::make_shared<ConstantNode>(va / vb);
        if (vb == 1.0) return a;
    }
    if (is_const(a, &va) && va == 0.0) return std::make_shared<ConstantNode>(0.0);
    check_overlap(*a, *b);
    return std::make_shared<QuotientNode>(std::move(a), std::move(b));
}

} // namespace
} // namespace detail

using detail::TimeFnNode;

TimeFn::TimeFn() : node_(std::make_shared<detail::ConstantNode>(0.0)) {}
TimeFn::TimeFn(std::shared_ptr<const TimeFnNode> node) : node_(std::move(node)) {}

TimeFn TimeFn::constant(double value) {
    return TimeFn(std::make_shared<detail::ConstantNode>(value));
}
TimeFn TimeFn::linear(double slope, double intercept) {
    return TimeFn(std::make_shared<detail::LinearNode>(slope, intercept));
}
TimeFn TimeFn::exponential(double amplitude, double rate) {
    return TimeFn(std::make_shared<detail::ExponentialNode>(amplitude, rate));
}
TimeFn TimeFn::tabulated(double t0, double dt, std::vector<double> values) {
    return TimeFn(std::make_shared<detail::TabulatedNode>(t0, dt, std::move(values)));
}

double TimeFn::value(double t) const {
    if (!node_->domain().contains(t)) detail::throw_outside(t, node_->domain());
    return node_->value(t);
}
double TimeFn::derivative(double t) const {
    if (!node_->domain().contains(t)) detail::throw_outside(t, node_->domain());
    return node_->derivative(t);
}
TimeFn TimeFn::derivative_fn() const { return TimeFn(node_->derivative_node()); }
TimeDomain TimeFn::domain() const { return node_->domain(); }
TimeFnKind TimeFn::kind() const { return node_->kind(); }
bool TimeFn::contains_tabulated() const { return node_->contains_tabulated(); }

double TimeFn::constant_value() const {
    return dynamic_cast<const detail::ConstantNode&>(*node_).v_;
}
double TimeFn::linear_slope() const {
    return dynamic_cast<const detail::LinearNode&>(*node_).slope_;
}
double TimeFn::linear_intercept() const {
    return dynamic_cast<const detail::LinearNode&>(*node_).intercept_;
}
double TimeFn::exp_amplitude() const {
    return dynamic_cast<const detail::ExponentialNode&>(*node_).amplitude_;
}
double TimeFn::exp_rate() const {
    return dynamic_cast<const detail::ExponentialNode&>(*node_).rate_;
}
double TimeFn::table_t0() const {
    return dynamic_cast<const detail::TabulatedNode&>(*node_).t0_;
}
double TimeFn::table_dt() const {
    return dynamic_cast<const detail::TabulatedNode&>(*node_).dt_;
}
const std::vector<double>& TimeFn::table_values() const {
    return dynamic_cast<const detail::TabulatedNode&>(*node_).values_;
}

TimeFn operator+(const TimeFn& a, const TimeFn& b) {
    return TimeFn(detail::make_sum(a.node_, b.node_));
}
TimeFn operator-(const TimeFn& a, const TimeFn& b) {
    return TimeFn(detail::make_sum(
        a.node_, detail::make_product(std::make_shared<detail::ConstantNode>(-1.0), b.node_)));
}
TimeFn operator*(const TimeFn& a, const TimeFn& b) {
    return TimeFn(detail::make_product(a.node_, b.node_));
}
TimeFn operator/(const TimeFn& a, const TimeFn& b) {
    return TimeFn(detail::make_quotient(a.node_, b.node_));
}
TimeFn operator-(const TimeFn& a) {
    return TimeFn(detail::make_product(std::make_shared<detail::ConstantNode>(-1.0), a.node_));
}

} // namespace nlse
