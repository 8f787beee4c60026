#include "nlse/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nlse/log.hpp"
#include "nlse/spectral.hpp"

namespace nlse {

Potential Potential::zero() { return Potential(); }

Potential Potential::harmonic(double omega) {
    Potential p;
    p.kind_ = Kind::harmonic;
    p.omega_ = omega;
    return p;
}

Potential Potential::from_samples(std::vector<double> values) {
    Potential p;
    p.kind_ = Kind::samples;
    p.values_ = std::move(values);
    return p;
}

std::vector<double> Potential::sample(const GridSpec& grid) const {
    std::vector<double> v(static_cast<size_t>(grid.n), 0.0);
    switch (kind_) {
        case Kind::zero:
            break;
        case Kind::harmonic:
            for (int i = 0; i < grid.n; ++i) {
                const double x = grid.x(i);
                v[static_cast<size_t>(i)] = 0.5 * omega_ * omega_ * x * x;
            }
            break;
        case Kind::samples:
            if (static_cast<int>(values_.size()) != grid.n)
                throw InvalidInputError("potential sample count does not match grid");
            v = values_;
            break;
    }
    return v;
}

std::vector<double> Potential::gradient(const GridSpec& grid) const {
    std::vector<double> g(static_cast<size_t>(grid.n), 0.0);
    switch (kind_) {
        case Kind::zero:
            break;
        case Kind::harmonic:
            for (int i = 0; i < grid.n; ++i)
                g[static_cast<size_t>(i)] = omega_ * omega_ * grid.x(i);
            break;
        case Kind::samples: {
            if (static_cast<int>(values_.size()) != grid.n)
                throw InvalidInputError("potential sample count does not match grid");
            const double h = grid.dx();
            for (int i = 0; i < grid.n; ++i) {
                const int ip = (i + 1) % grid.n;
                const int im = (i + grid.n - 1) % grid.n;
                g[static_cast<size_t>(i)] =
                    (values_[static_cast<size_t>(ip)] - values_[static_cast<size_t>(im)]) /
                    (2.0 * h);
            }
            break;
        }
    }
    return g;
}

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::ok: return "ok";
        case RunStatus::diverged: return "diverged";
        case RunStatus::not_applicable: return "not-applicable";
        case RunStatus::phase_branch_error: return "phase-branch-error";
    }
    return "ok";
}

const WaveFunction& TrajectoryRecord::final_state() const {
    if (snapshots.empty()) throw InvalidInputError("trajectory carries no snapshots");
    return snapshots.back();
}

namespace {

struct CoeffValues {
    double nu1, nu2, mu0, mu1, mu2, mu3, mu4, mu5, alpha1, alpha2;
    double b2, b3, b5; // R₂, R₃, R₅ bracket coefficients of the explicit form

    bool nonlinear() const {
        return nu2 != 0.0 || mu1 != 0.0 || b2 != 0.0 || b3 != 0.0 || mu4 != 0.0 || b5 != 0.0;
    }
};

CoeffValues eval_coefficients(const CoefficientVector& c, double t) {
    CoeffValues v{};
    v.nu1 = c.nu1.value(t);
    v.nu2 = c.nu2.value(t);
    v.mu0 = c.mu0.value(t);
    v.mu1 = c.mu1.value(t);
    v.mu2 = c.mu2.value(t);
    v.mu3 = c.mu3.value(t);
    v.mu4 = c.mu4.value(t);
    v.mu5 = c.mu5.value(t);
    v.alpha1 = c.alpha1.value(t);
    v.alpha2 = c.alpha2.value(t);
    if (v.nu1 == 0.0 || !std::isfinite(v.nu1))
        throw InvalidInputError("nu1(t) = 0 inside the evolution window");
    v.b2 = v.mu2 - 0.5 * v.nu1;
    v.b3 = v.mu3 + v.nu1;
    v.b5 = v.mu5 + 0.25 * v.nu1;
    return v;
}

class RhsEvaluator {
public:
    RhsEvaluator(const GridSpec& grid, const CoefficientVector& c, const Potential& V,
                 FunctionalOptions fopts, UnwrapOptions uopts)
        : grid_(grid), coeffs_(c), fopts_(fopts), uopts_(uopts), vsamp_(V.sample(grid)),
          has_potential_(!V.is_zero()) {}

    // out = ∂t ψ at time t
    void operator()(std::span<const cplx> psi, double t, std::vector<cplx>& out) {
        const CoeffValues cv = eval_coefficients(coeffs_, t);
        const size_t n = psi.size();
        out.resize(n);

        const bool need_fields = cv.nonlinear();
        const bool need_log = cv.alpha1 != 0.0;
        const bool need_arg = cv.alpha2 != 0.0;

        if (!need_fields && !need_log) {
            // Linear member (possibly with the phase term): ν₁Δψ + μ₀Vψ [+ α₂Sψ]
            lap_.assign(psi.begin(), psi.end());
            spectral::fft(lap_, false);
            const std::vector<double> ks = grid_.wavenumbers();
            for (size_t i = 0; i < n; ++i) {
                const double k = ks[i];
                lap_[i] *= -k * k;
            }
            spectral::fft(lap_, true);
            const double* S = need_arg ? phase_for(psi) : nullptr;
            for (size_t i = 0; i < n; ++i) {
                cplx F = cv.nu1 * lap_[i];
                if (has_potential_) F += cv.mu0 * vsamp_[i] * psi[i];
                if (need_arg) F += cv.alpha2 * S[i] * psi[i];
                out[i] = cplx(0.0, -1.0) * F;
            }
            return;
        }

        detail::assemble_fields(grid_, psi, work_);
        double rho_max = 0.0;
        for (double r : work_.rho) rho_max = std::max(rho_max, r);
        const double eps = fopts_.eps_reg_scale * rho_max;
        const double* S = need_arg ? phase_for(psi) : nullptr;

        for (size_t i = 0; i < n; ++i) {
            const double rt = work_.rho[i] + eps;
            const double jr = work_.current[i] / rt;
            const double gr = work_.grad_rho[i] / rt;
            const double r1 = work_.div_current[i] / rt;
            const double r2 = work_.lap_rho[i] / rt;
            const double r3 = jr * jr;
            const double r4 = jr * gr;
            const double r5 = gr * gr;

            cplx F = cv.nu1 * work_.ddpsi[i];
            if (has_potential_) F += cv.mu0 * vsamp_[i] * psi[i];
            F += cplx(0.0, cv.nu2 * r2) * psi[i];
            double real_bracket = cv.mu1 * r1 + cv.b2 * r2 + cv.b3 * r3 + cv.mu4 * r4 + cv.b5 * r5;
            if (need_log) real_bracket += cv.alpha1 * std::log(work_.rho[i] + eps);
            if (need_arg) real_bracket += cv.alpha2 * S[i];
            F += real_bracket * psi[i];
            out[i] = cplx(0.0, -1.0) * F;
        }
    }

private:
    const double* phase_for(std::span<const cplx> psi) {
        WaveFunction tmp(grid_, std::vector<cplx>(psi.begin(), psi.end()));
        unwrapped_ = unwrap_phase_masked(tmp, uopts_).phase;
        return unwrapped_.data();
    }

    GridSpec grid_;
    const CoefficientVector& coeffs_;
    FunctionalOptions fopts_;
    UnwrapOptions uopts_;
    std::vector<double> vsamp_;
    bool has_potential_;
    detail::FieldArrays work_;
    std::vector<cplx> lap_;
    std::vector<double> unwrapped_;
};

double mean_force(std::span<const double> grad_v, std::span<const cplx> psi) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < psi.size(); ++i) {
        const double r = std::norm(psi[i]);
        num -= grad_v[i] * r;
        den += r;
    }
    return den > 0.0 ? num / den : 0.0;
}

} // namespace

double stability_dt_bound(const CoefficientVector& c, const GridSpec& grid, double t0,
                          double t1) {
    double nu1_max = 0.0, nu2_max = 0.0;
    const int probes = 65;
    for (int i = 0; i < probes; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) / (probes - 1);
        nu1_max = std::max(nu1_max, std::abs(c.nu1.value(t)));
        nu2_max = std::max(nu2_max, std::abs(c.nu2.value(t)));
    }
    if (nu1_max == 0.0) throw InvalidInputError("stability bound undefined for nu1 = 0");
    const double dx = grid.dx();
    double bound = 0.4 * dx * dx / (2.0 * nu1_max);
    if (nu2_max > 0.0) {
        const double kmax = std::numbers::pi / dx;
        bound = std::min(bound, 2.5 / (2.0 * nu2_max * kmax * kmax));
    }
    return bound;
}

std::vector<cplx> rhs(const WaveFunction& psi, double t, const CoefficientVector& c,
                      const Potential& V, const FunctionalOptions& fopts,
                      const UnwrapOptions& uopts) {
    RhsEvaluator eval(psi.grid(), c, V, fopts, uopts);
    std::vector<cplx> out;
    eval(psi.values(), t, out);
    for (const cplx& v : out)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericalDomainError("rhs produced a non-finite value");
    return out;
}

std::vector<cplx> rhs_natural(const WaveFunction& psi, double t, const CoefficientVector& c,
                              const Potential& V, const FunctionalOptions& fopts,
                              const UnwrapOptions& uopts) {
    const CoeffValues cv = eval_coefficients(c, t);
    const FieldDiagnostics d = functionals(psi, fopts);
    const std::vector<double> vs = V.sample(psi.grid());
    const size_t n = psi.values().size();

    std::vector<double> S;
    if (cv.alpha2 != 0.0) S = unwrap_phase_masked(psi, uopts).phase;

    std::vector<cplx> out(n);
    for (size_t i = 0; i < n; ++i) {
        const cplx p = psi.values()[i];
        const cplx ifac(0.0, 1.0);
        cplx F = ifac * (cv.nu1 * d.r1[i] + cv.nu2 * d.r2[i]) * p;
        F += (cv.mu1 * d.r1[i] + cv.mu2 * d.r2[i] + cv.mu3 * d.r3[i] + cv.mu4 * d.r4[i] +
              cv.mu5 * d.r5[i] + cv.mu0 * vs[i]) *
             p;
        F += cv.alpha1 * std::log(d.rho[i] + d.eps_reg) * p;
        if (cv.alpha2 != 0.0) F += cv.alpha2 * S[i] * p;
        out[i] = -ifac * F;
    }
    return out;
}

TrajectoryRecord run(const EvolutionSpec& spec, const WaveFunction& psi0) {
    if (!(psi0.grid() == spec.grid))
        throw InvalidInputError("initial state grid does not match the evolution grid");
    if (spec.t1 < spec.t0) throw ConfigError("evolution window requires t1 >= t0");
    if (spec.sample_stride < 1) throw ConfigError("sample_stride must be >= 1");
    if (spec.snapshot_stride < 0) throw ConfigError("snapshot_stride must be >= 0");
    if (std::abs(psi0.norm() - 1.0) > 1e-6)
        throw InvalidInputError("initial state must be normalized");

    TrajectoryRecord rec;

    const double span = spec.t1 - spec.t0;
    if (span == 0.0) {
        TrajectorySample s{};
        s.t = spec.t0;
        s.norm = psi0.norm();
        s.mean_x = mean_x(psi0);
        s.mean_p = mean_p(psi0);
        s.mean_force = std::numeric_limits<double>::quiet_NaN();
        s.continuity_resid = std::numeric_limits<double>::quiet_NaN();
        s.ehrenfest1_resid = std::numeric_limits<double>::quiet_NaN();
        rec.samples.push_back(s);
        rec.snapshots.push_back(psi0.with_time_tag(spec.t0));
        rec.dt = 0.0;
        return rec;
    }

    const double bound = stability_dt_bound(spec.coefficients, spec.grid, spec.t0, spec.t1);
    double dt = spec.dt;
    if (dt <= 0.0) {
        dt = bound;
    } else if (dt > bound * (1.0 + 1e-9)) {
        throw ConfigError("dt exceeds the stability bound 0.4*dx^2/(2|nu1|)");
    }
    const long nsteps = std::max(1L, std::lround(std::ceil(span / dt - 1e-12)));
    dt = span / static_cast<double>(nsteps);
    rec.dt = dt;
    NLSE_LOG_DEBUG("run: %ld steps, dt=%.3e", nsteps, dt);

    RhsEvaluator eval(spec.grid, spec.coefficients, spec.potential, spec.functional_opts,
                      spec.unwrap_opts);
    const std::vector<double> grad_v = spec.potential.gradient(spec.grid);
    const bool has_potential = !spec.potential.is_zero();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<cplx> psi(psi0.values());
    std::vector<cplx> stage, k1, k2, k3, k4;
    const size_t n = psi.size();
    const double norm0 = psi0.norm();

    // A sample's continuity/Ehrenfest residuals need the neighboring steps;
    // they are finalized one step late.
    struct Pending {
        size_t sample_index;
        double t;
        std::vector<cplx> before, at;
    };
    std::optional<Pending> pending;
    std::vector<cplx> prev;

    const auto push_sample = [&](double t, const std::vector<cplx>& values) {
        WaveFunction w(spec.grid, values, t);
        TrajectorySample s{};
        s.t = t;
        s.norm = w.norm();
        s.mean_x = mean_x(w);
        s.mean_p = mean_p(w);
        s.mean_force = has_potential ? mean_force(grad_v, values) : nan;
        s.continuity_resid = nan;
        s.ehrenfest1_resid = nan;
        rec.samples.push_back(s);
        if (spec.edge_mass_guard > 0.0 && rec.warnings.empty() &&
            edge_mass(w) > spec.edge_mass_guard)
            rec.warnings.push_back("edge-mass guard exceeded: moments unreliable");
        return s;
    };

    const auto finalize_pending = [&](const std::vector<cplx>& after) {
        if (!pending) return;
        const Pending& p = *pending;
        // ∂t ρ by centered difference across one step.
        const CoeffValues cv = eval_coefficients(spec.coefficients, p.t);
        detail::FieldArrays fa;
        detail::assemble_fields(spec.grid, p.at, fa);
        double num = 0.0, den_dt = 0.0, den_rhs = 0.0, rho_l2 = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double drho =
                (std::norm(after[i]) - std::norm(p.before[i])) / (2.0 * dt);
            const double rhs_rho = 2.0 * cv.nu1 * fa.div_current[i] + 2.0 * cv.nu2 * fa.lap_rho[i];
            num += (drho - rhs_rho) * (drho - rhs_rho);
            den_dt += drho * drho;
            den_rhs += rhs_rho * rhs_rho;
            rho_l2 += fa.rho[i] * fa.rho[i];
        }
        const double den = std::sqrt(den_dt) + std::sqrt(den_rhs) + std::sqrt(rho_l2);
        auto& sample = rec.samples[p.sample_index];
        sample.continuity_resid = std::sqrt(num) / den;

        // d⟨x⟩/dt vs -2ν₁⟨-i∇⟩ across the same stencil.
        WaveFunction wb(spec.grid, p.before, p.t - dt);
        WaveFunction wa(spec.grid, after, p.t + dt);
        const double dxdt = (mean_x(wa) - mean_x(wb)) / (2.0 * dt);
        const double target = -2.0 * cv.nu1 * sample.mean_p;
        sample.ehrenfest1_resid =
            std::abs(dxdt - target) / std::max(std::abs(sample.mean_p), 1e-12);
        pending.reset();
    };

    push_sample(spec.t0, psi);
    rec.snapshots.push_back(psi0.with_time_tag(spec.t0));
    size_t samples_taken = 1;

    try {
        for (long step = 0; step < nsteps; ++step) {
            const double t = spec.t0 + dt * static_cast<double>(step);
            prev = psi;

            eval(psi, t, k1);
            stage.resize(n);
            for (size_t i = 0; i < n; ++i) stage[i] = psi[i] + 0.5 * dt * k1[i];
            eval(stage, t + 0.5 * dt, k2);
            for (size_t i = 0; i < n; ++i) stage[i] = psi[i] + 0.5 * dt * k2[i];
            eval(stage, t + 0.5 * dt, k3);
            for (size_t i = 0; i < n; ++i) stage[i] = psi[i] + dt * k3[i];
            eval(stage, t + dt, k4);
            for (size_t i = 0; i < n; ++i)
                psi[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

            const double tn = spec.t0 + dt * static_cast<double>(step + 1);
            finalize_pending(psi);

            const bool is_sample = ((step + 1) % spec.sample_stride == 0) || step + 1 == nsteps;
            if (is_sample) {
                push_sample(tn, psi);
                const size_t idx = rec.samples.size() - 1;
                if (step + 1 < nsteps)
                    pending = Pending{idx, tn, prev, psi};
                const double drift = std::abs(rec.samples[idx].norm / norm0 - 1.0);
                if (!std::isfinite(drift) || drift > spec.norm_drift_abort) {
                    rec.status = RunStatus::diverged;
                    rec.message = "norm drift exceeded the divergence guard";
                    rec.snapshots.push_back(WaveFunction(spec.grid, psi, tn));
                    return rec;
                }
                if (spec.snapshot_stride > 0 && samples_taken % spec.snapshot_stride == 0 &&
                    step + 1 < nsteps)
                    rec.snapshots.push_back(WaveFunction(spec.grid, psi, tn));
                ++samples_taken;
            }
        }
    } catch (const PhaseBranchError& e) {
        rec.status = RunStatus::phase_branch_error;
        rec.message = e.what();
        return rec;
    }

    rec.snapshots.push_back(WaveFunction(spec.grid, psi, spec.t1));
    return rec;
}

} // namespace nlse
