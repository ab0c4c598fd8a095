#pragma once

// Mass, force and momentum structure of a spinning charge.
//
// All first-order spin corrections are kept to the accuracy O(hbar^2),
// O(hbar (g-2)); nothing here resums higher orders.

#include "spindyn/fields.hpp"
#include "spindyn/particle.hpp"

namespace spindyn {

/// m = m0 (1 - mu/(2 m0 c^2) H_{ab} Pi^{ab}).
double spin_mass(const ParticleParams& p, const AntisymTensor2& spin, const AntisymTensor2& H);

/// Lorentz-force acceleration with the rest mass, w = (e / m0 c) H v.
FourVector lorentz_accel(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H);

/// dv/dtau from m dv/dtau = (e/c) H v + (mu/2) Pi_{ab} d->^rho H^{ab}.
/// Throws NumericError if the spin mass is not positive.
FourVector charge_accel(const ParticleParams& p, const ParticleState& s, const FieldSample& f);

/// Stern-Gerlach part of the charge force, (mu/2) Pi_{ab} d->^rho H^{ab}.
FourVector stern_gerlach_force(const ParticleParams& p, const ParticleState& s, const FieldSample& f);

/// dP/dtau = (e/c) H v + (mu/2) Pi_{ab} d^rho H^{ab}, full (not space-like) derivative.
FourVector momentum_rate(const ParticleParams& p, const ParticleState& s, const FieldSample& f);

enum class MassRateMode { approx, exact };

/// dm/dtau. approx: -(mu/2c^2) v_l Pi_{ab} d^l H^{ab}.
/// exact: adds (mu/c^4) w_a Pi^{ar} H_{rb} v^b with w = charge_accel.
double dm_dtau(const ParticleParams& p, const ParticleState& s, const FieldSample& f,
               MassRateMode mode = MassRateMode::approx);

/// Frenkel noncollinearity vector
///   Z-> = Pi^{ab} ( mu hbar/(4 m0 c^2) Pi_{rl} d->_b H^{rl} - mu_a/c^2 H_{br} v^r ).
FourVector z_frenkel(const ParticleParams& p, const ParticleState& s, const FieldSample& f);

/// Acceleration form Z-> = hbar/(2c^2) Pi^{ab} w_b - mu/c^2 Pi^a_r H^{rb} v_b.
FourVector z_frenkel_accel(const ParticleParams& p, const ParticleState& s, const AntisymTensor2& H,
                           const FourVector& w);

/// Shirokov noncollinearity vector, same as z_frenkel with the full derivative.
FourVector z_shirokov(const ParticleParams& p, const ParticleState& s, const FieldSample& f);

enum class MomentumForm { frenkel, shirokov };

/// P = m v + Z.
FourVector momentum(const ParticleParams& p, const ParticleState& s, const FieldSample& f, MomentumForm form);

/// S^mu = (1/2 m0 c) eps^{mu nu a b} Pi_{ab} P_nu. Throws std::domain_error unless P is time-like.
FourVector spin_four_vector(const ParticleParams& p, const AntisymTensor2& spin, const FourVector& P);

/// Pi^{ab} = (1/m0 c) eps^{ab r s} S_r P_s. Throws std::domain_error unless P is time-like.
AntisymTensor2 tensor_from_spin_vector(const ParticleParams& p, const FourVector& S, const FourVector& P);

/// Adds (1/N^2) n^{[a} q^{b]} with q^b = n_a Pi^{ab}, N^2 = -n.n. The result satisfies
/// n_a Pi^{ab} = 0 exactly in exact arithmetic. n must be time-like.
AntisymTensor2 project_orthogonal(const AntisymTensor2& spin, const FourVector& n);

}  // namespace spindyn
