#pragma once

#include "spindyn/minkowski.hpp"

namespace spindyn {

/// Physical constants of the particle. Gaussian-style: c, hbar, m0, e stay
/// explicit in every formula. The default unit system sets m0 = c = |e| = 1
/// and keeps hbar as a small dimensionless knob.
struct ParticleParams {
    double m0 = 1.0;
    double charge = 1.0;
    double g = 2.0;
    double hbar = 1e-3;
    double c = 1.0;
    double spin_number = 0.5;

    /// mu0 = e hbar / (2 m0 c)
    double bohr_magneton() const { return charge * hbar / (2.0 * m0 * c); }
    /// mu = g mu0 s
    double magnetic_moment() const { return g * bohr_magneton() * spin_number; }
    /// mu_a = mu0 (g - 2) / 2
    double anomalous_moment() const { return bohr_magneton() * (g - 2.0) / 2.0; }

    /// Throws std::invalid_argument unless m0 > 0, c > 0 and hbar >= 0.
    void validate() const;

    friend bool operator==(const ParticleParams&, const ParticleParams&) = default;
};

/// Covariant particle state. The 4-velocity satisfies v.v = -c^2 and the
/// dimensionless spin tensor the Frenkel condition v_alpha Pi^{alpha beta} = 0
/// (within integrator tolerance).
struct ParticleState {
    double tau = 0.0;
    FourVector r;
    FourVector v;
    AntisymTensor2 spin;
};

/// c * gamma * (1, beta); throws std::domain_error unless |beta| < 1.
FourVector four_velocity(const Vec3& beta, double c);

inline double lorentz_gamma(const FourVector& v, double c) { return v[0] / c; }
inline Vec3 velocity_beta(const FourVector& v) { return v.spatial() / v[0]; }

}  // namespace spindyn
