#include "spindyn/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "spindyn/errors.hpp"

namespace spindyn {

namespace {

constexpr std::array<std::pair<Formulation, std::string_view>, 4> kFormulationTags{{
    {Formulation::frenkel_corben, "frenkel-corben"},
    {Formulation::shirokov_momentum, "shirokov-momentum"},
    {Formulation::bmt_zeta, "bmt-zeta"},
    {Formulation::effective_field, "effective-field"},
}};

bool finite(const Phase& x) {
    bool ok = std::isfinite(x.mass);
    for (int i = 0; i < 4; ++i) ok = ok && std::isfinite(x.r[i]) && std::isfinite(x.kinetic[i]);
    for (int i = 0; i < 3; ++i) ok = ok && std::isfinite(x.spin.e[i]) && std::isfinite(x.spin.b[i]);
    return ok;
}

[[noreturn]] void numeric_failure(const Phase& x, const char* what) {
    std::ostringstream os;
    os.precision(17);
    os << what << " at tau=" << x.tau << ": r=" << x.r << " kinetic=" << x.kinetic << " spin=" << x.spin
       << " mass=" << x.mass;
    throw NumericError(os.str());
}

Phase zero_rate_like(const Phase& x) {
    Phase r;
    r.tau = x.tau;
    return r;
}

double spin_square(Formulation f, const AntisymTensor2& spin) {
    // bmt-zeta stores zeta; Pi_{ab} Pi^{ab} = 2 |zeta|^2 for the matching tensor.
    return f == Formulation::bmt_zeta ? 2.0 * dot(spin.b, spin.b) : contract_tt(spin, spin);
}

double supplementary_residual(const AntisymTensor2& spin, const FourVector& n) {
    const double pin = component_norm(spin);
    if (pin == 0.0) return 0.0;
    const double nn = std::sqrt(std::fabs(contract_vv(n, n)));
    return component_norm(contract_tv(spin, n)) / (pin * nn);
}

}  // namespace

std::string_view to_string(Formulation f) {
    for (const auto& [tag, name] : kFormulationTags)
        if (tag == f) return name;
    return "unknown";
}

std::optional<Formulation> parse_formulation(std::string_view tag) {
    for (const auto& [f, name] : kFormulationTags)
        if (name == tag) return f;
    return std::nullopt;
}

bool supports(Formulation f, const FieldModel& model) {
    if (f == Formulation::bmt_zeta || f == Formulation::effective_field) return model.is_uniform();
    return true;
}

void require_supported(Formulation f, const FieldModel& model) {
    if (!supports(f, model))
        throw RegimeError(std::string(to_string(f)) + " requires a homogeneous field, got " +
                          std::string(model.tag()));
}

std::string_view to_string(Method m) { return m == Method::rk4_fixed ? "rk4-fixed" : "rk45-adaptive"; }

std::optional<Method> parse_method(std::string_view tag) {
    if (tag == "rk4-fixed") return Method::rk4_fixed;
    if (tag == "rk45-adaptive") return Method::rk45_adaptive;
    return std::nullopt;
}

void StepConfig::validate() const {
    std::vector<std::string> errors;
    if (!(step > 0.0)) errors.emplace_back("integrator.step: must be > 0");
    if (!(tolerance > 0.0)) errors.emplace_back("integrator.tolerance: must be > 0");
    if (!(duration >= 0.0) || !std::isfinite(duration)) errors.emplace_back("integrator.duration: must be >= 0");
    if (stride < 1) errors.emplace_back("integrator.stride: must be >= 1");
    if (shirokov_iterations < 1) errors.emplace_back("integrator.shirokov_iterations: must be >= 1");
    if (!errors.empty()) throw ConfigError(std::move(errors));
}

Phase& Phase::axpy(double a, const Phase& rate) {
    r += a * rate.r;
    kinetic += a * rate.kinetic;
    spin += a * rate.spin;
    mass += a * rate.mass;
    return *this;
}

SpinSystem::SpinSystem(Formulation formulation, const ParticleParams& params, FieldModel model,
                       int shirokov_iterations)
    : formulation_(formulation), params_(params), model_(std::move(model)), shirokov_iterations_(shirokov_iterations) {
    params_.validate();
    require_supported(formulation_, model_);
    if (formulation_ == Formulation::shirokov_momentum && params_.hbar == 0.0)
        throw ConfigError("particle.hbar: shirokov-momentum needs hbar > 0 (the general spin equation divides by it)");
}

Phase SpinSystem::initial(const FourVector& r, const Vec3& beta, const SpinVector& zeta) const {
    const FourVector v = four_velocity(beta, params_.c);
    return initial(ParticleState{0.0, r, v, state_spin_from_zeta(zeta, beta)});
}

Phase SpinSystem::initial(const ParticleState& state) const {
    const FieldSample f = model_.sample(state.r);
    Phase x;
    x.tau = state.tau;
    x.r = state.r;
    x.mass = spin_mass(params_, state.spin, f.H);
    switch (formulation_) {
        case Formulation::frenkel_corben:
        case Formulation::effective_field:
            x.kinetic = state.v;
            x.spin = state.spin;
            break;
        case Formulation::bmt_zeta:
            x.kinetic = state.v;
            x.spin = {{}, zeta_from_state(state)};
            break;
        case Formulation::shirokov_momentum: {
            const FourVector P = x.mass * state.v + z_shirokov(params_, state, f);
            x.kinetic = P;
            x.spin = project_orthogonal(state.spin, P);
            break;
        }
    }
    return x;
}

FourVector recover_velocity(const ParticleParams& p, const FieldSample& f, const FourVector& P,
                            const AntisymTensor2& spin, int iterations) {
    const double pp = -contract_vv(P, P);
    if (!(pp > 0.0)) throw NumericError("momentum is not time-like");
    ParticleState s{0.0, {}, (p.c / std::sqrt(pp)) * P, spin};
    const double m = spin_mass(p, spin, f.H);
    if (!(m > 0.0)) throw NumericError("spin mass is not positive; field exceeds the perturbative regime");
    for (int i = 0; i < iterations; ++i) s.v = (P - z_shirokov(p, s, f)) / m;
    return s.v;
}

FourVector SpinSystem::velocity(const Phase& x) const {
    if (formulation_ != Formulation::shirokov_momentum) return x.kinetic;
    return recover_velocity(params_, model_.sample(x.r), x.kinetic, x.spin, shirokov_iterations_);
}

ParticleState SpinSystem::kinematic_state(const Phase& x) const {
    ParticleState s{x.tau, x.r, velocity(x), x.spin};
    if (formulation_ == Formulation::bmt_zeta)
        s.spin = state_spin_from_zeta(x.spin.b, velocity_beta(s.v));
    else if (formulation_ == Formulation::shirokov_momentum)
        s.spin = project_orthogonal(x.spin, s.v);
    return s;
}

Phase SpinSystem::derivative(const Phase& x) const {
    const FieldSample f = model_.sample(x.r);
    Phase rate = zero_rate_like(x);
    switch (formulation_) {
        case Formulation::frenkel_corben: {
            const ParticleState s{x.tau, x.r, x.kinetic, x.spin};
            rate.r = s.v;
            rate.kinetic = charge_accel(params_, s, f);
            rate.spin = spin_rate_corben(params_, s, f);
            rate.mass = dm_dtau(params_, s, f);
            break;
        }
        case Formulation::effective_field: {
            const ParticleState s{x.tau, x.r, x.kinetic, x.spin};
            rate.r = s.v;
            rate.kinetic = charge_accel(params_, s, f);
            rate.spin = spin_rate_effective(params_, s, f);
            break;
        }
        case Formulation::bmt_zeta: {
            const FourVector& v = x.kinetic;
            const ParticleState s{x.tau, x.r, v, state_spin_from_zeta(x.spin.b, velocity_beta(v))};
            rate.r = v;
            rate.kinetic = charge_accel(params_, s, f);
            rate.spin = {{}, zeta_rate_uniform(params_, v, x.spin.b, f.H)};
            break;
        }
        case Formulation::shirokov_momentum: {
            const FourVector& P = x.kinetic;
            const ParticleState s{x.tau, x.r, recover_velocity(params_, f, P, x.spin, shirokov_iterations_), x.spin};
            rate.r = s.v;
            rate.kinetic = momentum_rate(params_, s, f);
            rate.spin = spin_rate_general(params_, s, P, f);
            rate.mass = dm_dtau(params_, s, f);
            break;
        }
    }
    return rate;
}

void SpinSystem::project(Phase& x) const {
    const double c = params_.c;
    if (formulation_ == Formulation::shirokov_momentum) {
        x.spin = project_orthogonal(x.spin, x.kinetic);
        return;
    }
    FourVector& v = x.kinetic;
    const Vec3 vs = v.spatial();
    v[0] = std::sqrt(c * c + dot(vs, vs));
    if (formulation_ != Formulation::bmt_zeta) x.spin = project_orthogonal(x.spin, v);
}

Phase step_rk4(const SpinSystem& sys, const Phase& x, double h, bool projection) {
    const Phase k1 = sys.derivative(x);
    Phase y = x;
    const Phase k2 = sys.derivative(y.axpy(h / 2.0, k1));
    y = x;
    const Phase k3 = sys.derivative(y.axpy(h / 2.0, k2));
    y = x;
    const Phase k4 = sys.derivative(y.axpy(h, k3));
    y = x;
    y.axpy(h / 6.0, k1).axpy(h / 3.0, k2).axpy(h / 3.0, k3).axpy(h / 6.0, k4);
    y.tau = x.tau + h;
    if (!finite(y)) numeric_failure(x, "non-finite state after rk4 step");
    if (projection) sys.project(y);
    return y;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                 b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

template <class F>
void for_each_component(const Phase& a, const Phase& b, F&& fn) {
    for (int i = 0; i < 4; ++i) fn(a.r[i], b.r[i]);
    for (int i = 0; i < 4; ++i) fn(a.kinetic[i], b.kinetic[i]);
    for (int i = 0; i < 3; ++i) fn(a.spin.e[i], b.spin.e[i]);
    for (int i = 0; i < 3; ++i) fn(a.spin.b[i], b.spin.b[i]);
}

}  // namespace

namespace {

std::optional<Phase> attempt_rk45(const SpinSystem& sys, const Phase& x, double h, double tolerance, bool projection,
                                  double& h_next) {
    const Phase k1 = sys.derivative(x);
    Phase y = x;
    const Phase k2 = sys.derivative(y.axpy(h * a21, k1));
    y = x;
    const Phase k3 = sys.derivative(y.axpy(h * a31, k1).axpy(h * a32, k2));
    y = x;
    const Phase k4 = sys.derivative(y.axpy(h * a41, k1).axpy(h * a42, k2).axpy(h * a43, k3));
    y = x;
    const Phase k5 = sys.derivative(y.axpy(h * a51, k1).axpy(h * a52, k2).axpy(h * a53, k3).axpy(h * a54, k4));
    y = x;
    const Phase k6 =
        sys.derivative(y.axpy(h * a61, k1).axpy(h * a62, k2).axpy(h * a63, k3).axpy(h * a64, k4).axpy(h * a65, k5));
    Phase next = x;
    next.axpy(h * b1, k1).axpy(h * b3, k3).axpy(h * b4, k4).axpy(h * b5, k5).axpy(h * b6, k6);
    next.tau = x.tau + h;
    if (!finite(next)) numeric_failure(x, "non-finite state after rk45 step");
    const Phase k7 = sys.derivative(next);

    Phase err;
    err.axpy(h * e1, k1).axpy(h * e3, k3).axpy(h * e4, k4).axpy(h * e5, k5).axpy(h * e6, k6).axpy(h * e7, k7);

    // Mixed absolute/relative error norm, max over components.
    std::array<double, 14> scale{};
    std::size_t idx = 0;
    for_each_component(x, next, [&](double a, double b) {
        scale[idx++] = tolerance * (1.0 + std::max(std::fabs(a), std::fabs(b)));
    });
    double ratio = 0.0;
    idx = 0;
    for_each_component(err, err, [&](double ev, double) { ratio = std::max(ratio, std::fabs(ev) / scale[idx++]); });

    const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
    h_next = h * factor;
    if (ratio > 1.0) return std::nullopt;
    if (projection) sys.project(next);
    return next;
}

}  // namespace

std::optional<Phase> step_rk45(const SpinSystem& sys, const Phase& x, double h, double tolerance, bool projection,
                               double& h_next) {
    try {
        return attempt_rk45(sys, x, h, tolerance, projection, h_next);
    } catch (const std::domain_error&) {
    } catch (const NumericError&) {
    }
    // A trial stage left the physical domain (off-shell or non-finite): shrink and retry.
    h_next = 0.2 * h;
    return std::nullopt;
}

Phase step(const StepConfig& config, const SpinSystem& sys, const Phase& x) {
    if (config.method == Method::rk4_fixed) return step_rk4(sys, x, config.step, config.projection);
    double h = config.step;
    for (int attempt = 0; attempt < 64; ++attempt) {
        double h_next = h;
        if (auto next = step_rk45(sys, x, h, config.tolerance, config.projection, h_next)) return *next;
        h = h_next;
    }
    numeric_failure(x, "rk45 step size underflow");
}

TrajectorySample observe(const SpinSystem& sys, const Phase& x, double spin_norm0) {
    const ParticleParams& p = sys.params();
    const double c = p.c;
    const FieldSample f = sys.model().sample(x.r);
    TrajectorySample out;
    out.phase = x;
    out.state = sys.kinematic_state(x);
    out.zeta = sys.formulation() == Formulation::bmt_zeta ? x.spin.b : zeta_from_state(out.state);
    out.mass = spin_mass(p, out.state.spin, f.H);
    out.gamma = out.state.v[0] / c;
    out.t = x.r[0] / c;

    const bool shirokov = sys.formulation() == Formulation::shirokov_momentum;
    out.momentum = shirokov ? x.kinetic : momentum(p, out.state, f, MomentumForm::frenkel);

    Residuals& res = out.residuals;
    const FourVector& v = out.state.v;
    res.vv = std::fabs(contract_vv(v, v) + c * c) / (c * c);
    if (sys.formulation() != Formulation::bmt_zeta)
        res.supplementary = supplementary_residual(x.spin, shirokov ? x.kinetic : v);
    const double s2 = spin_square(sys.formulation(), x.spin);
    res.spin_norm = spin_norm0 == 0.0 ? std::fabs(s2) : std::fabs(s2 - spin_norm0) / std::fabs(spin_norm0);
    const double mc = out.mass * c;
    res.mass_shell = std::fabs(contract_vv(out.momentum, out.momentum) + mc * mc) / (mc * mc);
    res.invariant_spread = spin_field_invariant(p, out.state, f.H).spread();
    // The integrated mass tracks dm/dtau, which is only carried by the formulations that evolve it.
    if (sys.formulation() == Formulation::frenkel_corben || shirokov)
        res.mass_bookkeeping = std::fabs(x.mass - out.mass) / p.m0;
    return out;
}

namespace {

void accumulate(Residuals& max, const Residuals& r) {
    max.vv = std::max(max.vv, r.vv);
    max.supplementary = std::max(max.supplementary, r.supplementary);
    max.spin_norm = std::max(max.spin_norm, r.spin_norm);
    max.mass_shell = std::max(max.mass_shell, r.mass_shell);
    max.invariant_spread = std::max(max.invariant_spread, r.invariant_spread);
    max.mass_bookkeeping = std::max(max.mass_bookkeeping, r.mass_bookkeeping);
}

void check_initial(const SpinSystem& sys, const Phase& x) {
    const double c = sys.params().c;
    std::vector<std::string> errors;
    if (sys.formulation() == Formulation::shirokov_momentum) {
        if (supplementary_residual(x.spin, x.kinetic) > 1e-10)
            errors.emplace_back("initial: spin tensor violates P_a Pi^{ab} = 0");
    } else {
        const FourVector& v = x.kinetic;
        if (std::fabs(contract_vv(v, v) + c * c) > 1e-10 * c * c) errors.emplace_back("initial: v.v != -c^2");
        if (sys.formulation() != Formulation::bmt_zeta && supplementary_residual(x.spin, v) > 1e-10)
            errors.emplace_back("initial: spin tensor violates the Frenkel condition");
    }
    if (!errors.empty()) throw ConfigError(std::move(errors));
}

}  // namespace

Trajectory run(const StepConfig& config, const SpinSystem& sys, const Phase& initial) {
    config.validate();
    check_initial(sys, initial);
    Trajectory traj;
    traj.formulation = sys.formulation();
    const double s0 = spin_square(sys.formulation(), initial.spin);

    auto record = [&](const Phase& x) {
        traj.samples.push_back(observe(sys, x, s0));
        accumulate(traj.diagnostics.max, traj.samples.back().residuals);
    };

    Phase x = initial;
    record(x);
    const double t_end = initial.tau + config.duration;

    if (config.method == Method::rk4_fixed) {
        // Integer step count keeps the sample grid identical across formulations.
        const auto n = static_cast<std::size_t>(std::ceil(config.duration / config.step - 1e-9));
        for (std::size_t i = 1; i <= n; ++i) {
            const double h = (i == n) ? t_end - x.tau : config.step;
            x = step_rk4(sys, x, h, config.projection);
            if (i == n) x.tau = t_end;
            ++traj.diagnostics.steps;
            if (i % static_cast<std::size_t>(config.stride) == 0 || i == n) record(x);
        }
    } else {
        // Output points at multiples of step * stride, hit exactly, so that
        // adaptive runs of different formulations share one sample grid.
        const double interval = config.step * config.stride;
        const auto n = static_cast<std::size_t>(std::ceil(config.duration / interval - 1e-9));
        double h = config.step;
        for (std::size_t k = 1; k <= n; ++k) {
            const double target = (k == n) ? t_end : initial.tau + static_cast<double>(k) * interval;
            while (x.tau < target) {
                const bool hits = x.tau + h >= target * (1.0 - 1e-15);
                const double h_try = hits ? target - x.tau : h;
                double h_next = h_try;
                auto next = step_rk45(sys, x, h_try, config.tolerance, config.projection, h_next);
                if (!next) {
                    ++traj.diagnostics.rejected_steps;
                    if (std::fabs(h_next) < 1e-14 * std::max(1.0, std::fabs(t_end)))
                        numeric_failure(x, "rk45 step size underflow");
                    h = h_next;
                    continue;
                }
                x = *next;
                ++traj.diagnostics.steps;
                if (hits) {
                    x.tau = target;
                    // keep the controller's proposal unless the clipped step was the limiting one
                    if (h_try < h) h = std::max(h, h_next);
                    else h = h_next;
                } else {
                    h = h_next;
                }
            }
            record(x);
        }
    }
    traj.diagnostics.samples = traj.samples.size();
    return traj;
}

Deviation compare(const Trajectory& a, const Trajectory& b) {
    if (a.samples.size() != b.samples.size())
        throw ConfigError("compare: trajectories are sampled on different grids");
    Deviation d;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const auto& sa = a.samples[i];
        const auto& sb = b.samples[i];
        if (std::fabs(sa.phase.tau - sb.phase.tau) > 1e-12 * std::max(1.0, std::fabs(sa.phase.tau)))
            throw ConfigError("compare: trajectories are sampled on different grids");
        d.zeta = std::max(d.zeta, norm(sa.zeta - sb.zeta));
        d.position = std::max(d.position, norm(sa.state.r.spatial() - sb.state.r.spatial()));
        d.gamma = std::max(d.gamma, std::fabs(sa.gamma - sb.gamma));
    }
    return d;
}

}  // namespace spindyn
