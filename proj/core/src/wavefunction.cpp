#include "nlse/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlse/spectral.hpp"

namespace nlse {

namespace {

double wrap_to_pi(double d) {
    // Principal difference in (-π, π].
    d = std::remainder(d, 2.0 * std::numbers::pi);
    if (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
    return d;
}

double snap_branch(double accumulated, double principal) {
    const double two_pi = 2.0 * std::numbers::pi;
    return principal + two_pi * std::round((accumulated - principal) / two_pi);
}

} // namespace

WaveFunction::WaveFunction(GridSpec grid, std::vector<cplx> values, double time_tag)
    : grid_(grid), values_(std::move(values)), time_tag_(time_tag) {
    if (static_cast<int>(values_.size()) != grid_.n)
        throw InvalidInputError("wavefunction sample count does not match grid");
}

double WaveFunction::norm() const {
    double s = 0.0;
    for (const cplx& v : values_) s += std::norm(v);
    return std::sqrt(s * grid_.dx());
}

WaveFunction WaveFunction::normalized() const {
    const double n = norm();
    if (n == 0.0) throw InvalidInputError("cannot normalize the zero wavefunction");
    std::vector<cplx> v = values_;
    for (cplx& e : v) e /= n;
    return WaveFunction(grid_, std::move(v), time_tag_);
}

WaveFunction WaveFunction::with_time_tag(double t) const {
    return WaveFunction(grid_, values_, t);
}

WaveFunction gaussian_packet(const GridSpec& grid, double x0, double s, double k0) {
    if (!(s > 0.0)) throw InvalidInputError("gaussian width must be positive");
    const double amp = std::pow(std::numbers::pi * s * s, -0.25);
    std::vector<cplx> v(static_cast<size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double u = (x - x0) / s;
        v[static_cast<size_t>(i)] = std::polar(amp * std::exp(-0.5 * u * u), k0 * x);
    }
    return WaveFunction(grid, std::move(v));
}

WaveFunction periodized_gaussian(const GridSpec& grid, double x0, double s, double k0) {
    if (!(s > 0.0)) throw InvalidInputError("gaussian width must be positive");
    const double amp = std::pow(std::numbers::pi * s * s, -0.25);
    std::vector<cplx> v(static_cast<size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        double m = 0.0;
        for (int im = -2; im <= 2; ++im) {
            const double u = (x + im * grid.length - x0) / s;
            m += amp * std::exp(-0.5 * u * u);
        }
        v[static_cast<size_t>(i)] = std::polar(m, k0 * x);
    }
    return WaveFunction(grid, std::move(v)).normalized();
}

WaveFunction plane_wave(const GridSpec& grid, int mode) {
    const double k = 2.0 * std::numbers::pi * mode / grid.length;
    const double amp = 1.0 / std::sqrt(grid.length);
    std::vector<cplx> v(static_cast<size_t>(grid.n));
    for (int i = 0; i < grid.n; ++i)
        v[static_cast<size_t>(i)] = std::polar(amp, k * grid.x(i));
    return WaveFunction(grid, std::move(v));
}

namespace detail {

void assemble_fields(const GridSpec& grid, std::span<const cplx> psi, FieldArrays& out) {
    spectral::derivatives_1_2(grid, psi, out.dpsi, out.ddpsi);
    const auto n = psi.size();
    out.rho.resize(n);
    out.current.resize(n);
    out.div_current.resize(n);
    out.lap_rho.resize(n);
    out.grad_rho.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const cplx p = psi[i];
        const cplx cp = std::conj(p);
        const cplx pd = out.dpsi[i];
        const cplx pdd = out.ddpsi[i];
        const double rho = std::norm(p);
        const cplx cross = cp * pd;  // ψ̄ ∂x ψ
        const cplx cross2 = cp * pdd;
        out.rho[i] = rho;
        out.current[i] = cross.imag();
        out.div_current[i] = cross2.imag();
        out.lap_rho[i] = 2.0 * cross2.real() + 2.0 * std::norm(pd);
        out.grad_rho[i] = 2.0 * cross.real();
    }
}

} // namespace detail

DensityCurrent density_current(const WaveFunction& psi) {
    detail::FieldArrays w;
    detail::assemble_fields(psi.grid(), psi.values(), w);
    return {std::move(w.rho), std::move(w.current)};
}

FieldDiagnostics functionals(const WaveFunction& psi, const FunctionalOptions& opts) {
    detail::FieldArrays w;
    detail::assemble_fields(psi.grid(), psi.values(), w);

    const size_t n = w.rho.size();
    double rho_max = 0.0, rho_min = std::numeric_limits<double>::infinity();
    for (double r : w.rho) {
        rho_max = std::max(rho_max, r);
        rho_min = std::min(rho_min, r);
    }
    const double eps = opts.eps_reg_scale * rho_max;

    FieldDiagnostics d;
    d.rho = w.rho;
    d.current = w.current;
    d.regularized = rho_min < eps;
    d.eps_reg = eps;
    d.r1.resize(n);
    d.r2.resize(n);
    d.r3.resize(n);
    d.r4.resize(n);
    d.r5.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const double rt = w.rho[i] + eps;
        const double jr = w.current[i] / rt;
        const double gr = w.grad_rho[i] / rt;
        d.r1[i] = w.div_current[i] / rt;
        d.r2[i] = w.lap_rho[i] / rt;
        d.r3[i] = jr * jr;
        d.r4[i] = jr * gr;
        d.r5[i] = gr * gr;
        if (!std::isfinite(d.r1[i]) || !std::isfinite(d.r2[i]) || !std::isfinite(d.r3[i]) ||
            !std::isfinite(d.r4[i]) || !std::isfinite(d.r5[i]))
            throw NumericalDomainError("functional not finite after regularization");
    }
    return d;
}

UnwrapResult unwrap_phase(const WaveFunction& psi, const UnwrapOptions& opts) {
    const auto& v = psi.values();
    const size_t n = v.size();
    double amax = 0.0, amin = std::numeric_limits<double>::infinity();
    for (const cplx& p : v) {
        const double a = std::abs(p);
        amax = std::max(amax, a);
        amin = std::min(amin, a);
    }
    if (amin < opts.eps_phase_scale * amax)
        throw PhaseBranchError("wavefunction modulus below the phase-branch threshold");

    UnwrapResult r;
    r.phase.resize(n);
    double prev_arg = std::arg(v[0]);
    r.phase[0] = prev_arg;
    for (size_t i = 1; i < n; ++i) {
        const double a = std::arg(v[i]);
        const double acc = r.phase[i - 1] + wrap_to_pi(a - prev_arg);
        r.phase[i] = snap_branch(acc, a);
        prev_arg = a;
    }
    const double closing = r.phase[n - 1] + wrap_to_pi(std::arg(v[0]) - prev_arg);
    r.winding = static_cast<int>(std::lround((closing - r.phase[0]) / (2.0 * std::numbers::pi)));
    return r;
}

UnwrapResult unwrap_phase_masked(const WaveFunction& psi, const UnwrapOptions& opts) {
    const auto& v = psi.values();
    const size_t n = v.size();
    size_t i_min = 0, i_peak = 0;
    double amax = 0.0, amin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        const double a = std::abs(v[i]);
        if (a > amax) {
            amax = a;
            i_peak = i;
        }
        if (a < amin) {
            amin = a;
            i_min = i;
        }
    }
    if (amin == 0.0 || !std::isfinite(amax))
        throw PhaseBranchError("phase undefined: wavefunction has exact zeros");
    const double floor = opts.eps_phase_scale * amax;

    UnwrapResult r;
    r.phase.resize(n);
    r.phase[i_min] = std::arg(v[i_min]);
    for (size_t m = 1; m < n; ++m) {
        const size_t j = (i_min + m) % n;
        const size_t jp = (i_min + m - 1) % n;
        const double aj = std::abs(v[j]);
        const double ajp = std::abs(v[jp]);
        if (aj >= floor && ajp >= floor) {
            const double arg_j = std::arg(v[j]);
            const double acc = r.phase[jp] + wrap_to_pi(arg_j - std::arg(v[jp]));
            r.phase[j] = snap_branch(acc, arg_j);
        } else {
            r.phase[j] = r.phase[jp];
        }
    }
    // Re-anchor the branch at the peak so the overall offset is stable.
    const double arg_peak = std::arg(v[i_peak]);
    const double shift = snap_branch(r.phase[i_peak], arg_peak) - r.phase[i_peak];
    if (shift != 0.0)
        for (double& s : r.phase) s += shift;
    return r;
}

WaveFunction apply_gauge(const GaugeElement& g, const WaveFunction& psi, double t,
                         const UnwrapOptions& opts) {
    const double lam = g.lambda_checked(t);
    const double gam = g.gamma().value(t);
    const bool has_theta = !g.theta_is_zero();
    const auto& v = psi.values();
    const size_t n = v.size();
    std::vector<cplx> out(n);

    const auto theta_at = [&](size_t i) {
        return has_theta ? g.theta().value(psi.grid().x(static_cast<int>(i)), t) : 0.0;
    };

    if (std::abs(lam - 1.0) < 1e-12 || std::abs(lam + 1.0) < 1e-12) {
        const bool conjugate = lam < 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double a = std::abs(v[i]);
            if (a == 0.0) {
                out[i] = 0.0;
                continue;
            }
            const cplx base = conjugate ? std::conj(v[i]) : v[i];
            const double extra = gam * std::log(a) + theta_at(i);
            out[i] = (extra == 0.0) ? base : base * std::polar(1.0, extra);
        }
        return WaveFunction(psi.grid(), std::move(out), t);
    }

    const UnwrapResult S = unwrap_phase(psi, opts); // throws on near-zeros
    for (size_t i = 0; i < n; ++i) {
        const double a = std::abs(v[i]);
        if (a == 0.0) {
            out[i] = 0.0;
            continue;
        }
        out[i] = std::polar(a, gam * std::log(a) + lam * S.phase[i] + theta_at(i));
    }
    return WaveFunction(psi.grid(), std::move(out), t);
}

WaveFunction measure_project(const WaveFunction& psi, const std::vector<IndexInterval>& region) {
    const auto& v = psi.values();
    const int n = static_cast<int>(v.size());
    std::vector<char> inside(static_cast<size_t>(n), 0);
    for (const IndexInterval& iv : region) {
        if (iv.lo < 0 || iv.hi > n || iv.lo >= iv.hi)
            throw InvalidInputError("measurement interval out of range");
        for (int i = iv.lo; i < iv.hi; ++i) inside[static_cast<size_t>(i)] = 1;
    }
    double mass = 0.0;
    for (int i = 0; i < n; ++i)
        if (inside[static_cast<size_t>(i)]) mass += std::norm(v[static_cast<size_t>(i)]);
    mass *= psi.grid().dx();
    if (mass <= 0.0) throw EmptyRegionError("measurement region carries no probability");

    const double scale = 1.0 / std::sqrt(mass);
    std::vector<cplx> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] =
            inside[static_cast<size_t>(i)] ? v[static_cast<size_t>(i)] * scale : cplx(0.0);
    return WaveFunction(psi.grid(), std::move(out), psi.time_tag());
}

double mean_x(const WaveFunction& psi) {
    const auto& v = psi.values();
    double num = 0.0, den = 0.0;
    for (int i = 0; i < psi.grid().n; ++i) {
        const double r = std::norm(v[static_cast<size_t>(i)]);
        num += psi.grid().x(i) * r;
        den += r;
    }
    if (den == 0.0) throw InvalidInputError("mean of the zero wavefunction");
    return num / den;
}

double variance_x(const WaveFunction& psi) {
    const double m = mean_x(psi);
    const auto& v = psi.values();
    double num = 0.0, den = 0.0;
    for (int i = 0; i < psi.grid().n; ++i) {
        const double r = std::norm(v[static_cast<size_t>(i)]);
        const double d = psi.grid().x(i) - m;
        num += d * d * r;
        den += r;
    }
    return num / den;
}

double mean_p(const WaveFunction& psi) {
    const DensityCurrent dc = density_current(psi);
    double s = 0.0;
    for (double j : dc.current) s += j;
    double den = 0.0;
    for (double r : dc.rho) den += r;
    return s / den;
}

double edge_mass(const WaveFunction& psi, int band) {
    const auto& v = psi.values();
    const int n = psi.grid().n;
    double edge = 0.0, total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = std::norm(v[static_cast<size_t>(i)]);
        total += r;
        if (i < band || i >= n - band) edge += r;
    }
    return total > 0.0 ? edge / total : 0.0;
}

} // namespace nlse
