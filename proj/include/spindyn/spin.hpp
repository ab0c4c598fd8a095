#pragma once

// Spin-evolution right-hand sides and the Thomas-precession decomposition.
//
// Tensor forms evolve the dimensionless spin tensor Pi in proper time.
// The rest-frame spin vector zeta is tied to the magnetic-like part of Pi by
// a boost with the particle velocity. Precession frequencies (Omega_L,
// Omega_Th) are lab-time quantities: d zeta/dt = Omega x zeta.

#include "spindyn/dynamics.hpp"
#include "spindyn/fields.hpp"
#include "spindyn/particle.hpp"

namespace spindyn {

/// Rest-frame spin vector; its length is conserved by every precession equation.
using SpinVector = Vec3;

/// (hbar/2) dPi/dtau = -v^{[a} P^{b]} + mu H^{[a r} Pi_r^{b]}.
/// Throws std::domain_error for hbar == 0.
AntisymTensor2 spin_rate_general(const ParticleParams& p, const ParticleState& s, const FourVector& P,
                                 const FieldSample& f);

/// Corben equation: Larmor commutator plus the anomalous and gradient
/// corrections that keep the Frenkel condition along the flow.
AntisymTensor2 spin_rate_corben(const ParticleParams& p, const ParticleState& s, const FieldSample& f);

/// H_eff = H-> + (2 m0 / e g c) v^{[a} w^{b]}, w = (e/m0 c) H v.
AntisymTensor2 effective_field(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H);

/// dPi/dtau = (e g / 2 m0 c) [H_eff, Pi]. Homogeneous fields only; a sample
/// carrying a gradient raises RegimeError.
AntisymTensor2 spin_rate_effective(const ParticleParams& p, const ParticleState& s, const FieldSample& f);

SpinVector zeta_from_state(const ParticleState& s);
SpinVector zeta_from_spin(const AntisymTensor2& spin, const FourVector& v);

/// Frenkel-consistent spin tensor of a particle with velocity beta and rest-frame spin zeta.
AntisymTensor2 state_spin_from_zeta(const SpinVector& zeta, const Vec3& beta);

/// d zeta / d tau in external fields, including the hbar field-gradient term
/// (gradient acts on the field components only; zeta and beta held fixed).
Vec3 zeta_rate(const ParticleParams& p, const FourVector& v, const SpinVector& zeta, const FieldSample& f);

/// Homogeneous-field part of zeta_rate (no gradient term).
Vec3 zeta_rate_uniform(const ParticleParams& p, const FourVector& v, const SpinVector& zeta,
                       const AntisymTensor2& H);

/// The hbar field-gradient term of zeta_rate on its own.
Vec3 zeta_rate_gradient_term(const ParticleParams& p, const FourVector& v, const SpinVector& zeta,
                             const FieldSample& f);

/// Omega = Omega_L + Omega_Th (lab time).
struct PrecessionSplit {
    Vec3 larmor;
    Vec3 thomas;

    Vec3 total() const { return larmor + thomas; }
};

/// Larmor and Thomas frequencies from lab-frame fields.
PrecessionSplit precession_split(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H);

/// Same frequencies from the rest-frame fields: Omega_L = -(eg/2m0c)(1/gamma) B0,
/// Omega_Th = -(e/m0c)(1/(gamma+1)) beta x E0.
PrecessionSplit precession_split_rest_frame(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H);

/// Kinematical Thomas frequency -(1/c) gamma^2/(gamma+1) beta x a for lab acceleration a.
Vec3 thomas_kinematic(double c, const Vec3& beta, const Vec3& accel);

/// Lab-frame acceleration a = c d beta/dt from the 4-velocity and dv/dtau.
Vec3 lab_acceleration(const FourVector& v, const FourVector& dv_dtau, double c);

/// Kinematical field H_Th = (2 m0 / e g c) v^{[a} w^{b]} with w the Lorentz acceleration.
AntisymTensor2 thomas_field(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H);

/// E_Th = (1/2) eps^{ab rs} H^Th_{rs}.
AntisymTensor2 thomas_dual(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H);

/// The spin-field scalar evaluated four ways; all equal for Frenkel-consistent states.
struct SpinFieldInvariant {
    double full = 0.0;        // (1/2) H_{mn} Pi^{mn}
    double spacelike = 0.0;   // (1/2) H->_{mn} Pi^{mn}
    double effective = 0.0;   // (1/2) H_eff^{mn} Pi_{mn}
    double rest_frame = 0.0;  // zeta . B0

    double spread() const;
};

SpinFieldInvariant spin_field_invariant(const ParticleParams& p, const ParticleState& s, const AntisymTensor2& H);

}  // namespace spindyn
