#pragma once

// Proper-time integration of the coupled orbit + spin system.
//
// Four formulations share one phase-space layout (Phase):
//
//   frenkel-corben     r, v, Pi     charge equation with space-like derivative + Corben equation
//   shirokov-momentum  r, P, Pi     momentum equation + general spin equation, P_a Pi^{ab} = 0
//   bmt-zeta           r, v, zeta   Lorentz force + rest-frame zeta equation (homogeneous fields)
//   effective-field    r, v, Pi     Lorentz force + effective-field commutator (homogeneous fields)
//
// Lab time is carried by r^0 = c t, so dt/dtau = gamma is integrated alongside.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spindyn/dynamics.hpp"
#include "spindyn/fields.hpp"
#include "spindyn/spin.hpp"

namespace spindyn {

enum class Formulation { frenkel_corben, shirokov_momentum, bmt_zeta, effective_field };

std::string_view to_string(Formulation f);
std::optional<Formulation> parse_formulation(std::string_view tag);
inline constexpr Formulation kAllFormulations[] = {Formulation::frenkel_corben, Formulation::shirokov_momentum,
                                                   Formulation::bmt_zeta, Formulation::effective_field};

/// bmt-zeta and effective-field hold for homogeneous fields only.
bool supports(Formulation f, const FieldModel& model);
/// Throws RegimeError when !supports(f, model).
void require_supported(Formulation f, const FieldModel& model);

enum class Method { rk4_fixed, rk45_adaptive };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view tag);

struct StepConfig {
    Method method = Method::rk4_fixed;
    double step = 1e-3;        // proper-time step (rk4) or initial step (rk45)
    double tolerance = 1e-10;  // rk45 only, used as both absolute and relative tolerance
    double duration = 0.0;     // proper time
    int stride = 1;            // rk4: record every stride-th step; rk45: record at multiples of step * stride
    bool projection = true;
    int shirokov_iterations = 1;

    /// Throws ConfigError listing every violated field.
    void validate() const;

    friend bool operator==(const StepConfig&, const StepConfig&) = default;
};

/// Evolved variables. `kinetic` is v, except P for shirokov-momentum.
/// `spin` is Pi, except for bmt-zeta where spin.b holds zeta and spin.e = 0.
/// `mass` integrates dm/dtau for bookkeeping against the recomputed spin mass.
struct Phase {
    double tau = 0.0;
    FourVector r;
    FourVector kinetic;
    AntisymTensor2 spin;
    double mass = 0.0;

    Phase& axpy(double a, const Phase& rate);  // this += a * rate, tau excluded
};

/// Physics of one formulation in one field model.
class SpinSystem {
public:
    /// Throws RegimeError if the formulation does not hold in the model; validates params.
    SpinSystem(Formulation formulation, const ParticleParams& params, FieldModel model, int shirokov_iterations = 1);

    Formulation formulation() const { return formulation_; }
    const ParticleParams& params() const { return params_; }
    const FieldModel& model() const { return model_; }

    /// Phase from position, velocity and rest-frame spin. For shirokov-momentum
    /// P = m v + Z and Pi is projected onto the P-orthogonal subspace.
    Phase initial(const FourVector& r, const Vec3& beta, const SpinVector& zeta) const;
    /// Phase from a Frenkel-consistent state.
    Phase initial(const ParticleState& state) const;

    /// d(phase)/dtau; dr/dtau = v always.
    Phase derivative(const Phase& x) const;

    /// Restore v.v = -c^2 (v^0 from the spatial part) and the spin supplementary
    /// condition (Frenkel, or Shirokov for shirokov-momentum).
    void project(Phase& x) const;

    /// Velocity carried by the phase; recovered from P for shirokov-momentum.
    FourVector velocity(const Phase& x) const;

    /// Frenkel-consistent kinematic state (v, Pi projected onto v-orthogonal when needed).
    ParticleState kinematic_state(const Phase& x) const;

private:
    Formulation formulation_;
    ParticleParams params_;
    FieldModel model_;
    int shirokov_iterations_;
};

/// Shirokov velocity recovery: v0 = P c / sqrt(-P.P), then `iterations`
/// passes of v <- (P - Z(v)) / m.
FourVector recover_velocity(const ParticleParams& p, const FieldSample& f, const FourVector& P,
                            const AntisymTensor2& spin, int iterations = 1);

/// One step of size h (may be negative) with classical RK4, then optional projection.
/// Throws NumericError if the result is not finite.
Phase step_rk4(const SpinSystem& sys, const Phase& x, double h, bool projection);

/// One Dormand-Prince 5(4) attempt. Returns the proposed next step size in
/// `h_next`; an unset optional means the step was rejected. A trial stage that
/// leaves the physical domain counts as a rejection with h_next = h / 5.
std::optional<Phase> step_rk45(const SpinSystem& sys, const Phase& x, double h, double tolerance, bool projection,
                               double& h_next);

/// Advance by one configured step (rk4: config.step; rk45: adaptive with retries).
Phase step(const StepConfig& config, const SpinSystem& sys, const Phase& x);

/// Per-sample constraint residuals.
struct Residuals {
    double vv = 0.0;               // |v.v + c^2| / c^2
    double supplementary = 0.0;    // ||n_a Pi^{ab}|| / (||Pi|| N), n = v (or P for shirokov)
    double spin_norm = 0.0;        // |PiPi - PiPi(0)| / |PiPi(0)|
    double mass_shell = 0.0;       // |P.P + m^2 c^2| / (m^2 c^2)
    double invariant_spread = 0.0; // spread of the four spin-field invariant evaluations
    double mass_bookkeeping = 0.0; // |integrated m - spin_mass| / m0
};

struct TrajectorySample {
    Phase phase;
    ParticleState state;  // Frenkel-consistent view
    FourVector momentum;
    SpinVector zeta;
    double mass = 0.0;    // spin mass recomputed from the state
    double gamma = 0.0;
    double t = 0.0;       // lab time r^0 / c
    Residuals residuals;
};

struct Diagnostics {
    Residuals max;
    std::size_t samples = 0;
    std::size_t steps = 0;
    std::size_t rejected_steps = 0;
};

struct Trajectory {
    Formulation formulation = Formulation::frenkel_corben;
    std::vector<TrajectorySample> samples;
    Diagnostics diagnostics;
};

TrajectorySample observe(const SpinSystem& sys, const Phase& x, double spin_norm0);

/// Integrate from `initial` for config.duration. rk4 samples every config.stride
/// steps, rk45 at multiples of step * stride; both always sample the end point. Throws ConfigError for invalid configs or an initial
/// state violating its constraints by more than 1e-10.
Trajectory run(const StepConfig& config, const SpinSystem& sys, const Phase& initial);

/// Maximum deviations between two trajectories sampled on the same proper-time grid.
struct Deviation {
    double zeta = 0.0;
    double position = 0.0;
    double gamma = 0.0;
};

/// Throws ConfigError if the sample grids differ.
Deviation compare(const Trajectory& a, const Trajectory& b);

}  // namespace spindyn
