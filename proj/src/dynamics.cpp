#include "spindyn/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "spindyn/errors.hpp"

namespace spindyn {

namespace {

FourVector noncollinearity(const ParticleParams& p, const ParticleState& s, const AntisymTensor2& H,
                           const FieldGradient& grad) {
    const double mu = p.magnetic_moment();
    const double c2 = p.c * p.c;
    const FourVector x = (mu * p.hbar / (4.0 * p.m0 * c2)) * contract_gradient(s.spin, grad) -
                         (p.anomalous_moment() / c2) * contract_tv(H, s.v);
    return contract_tv(s.spin, x);
}

void require_timelike(const FourVector& P) {
    if (!(contract_vv(P, P) < 0.0)) throw std::domain_error("momentum must be time-like");
}

}  // namespace

double spin_mass(const ParticleParams& p, const AntisymTensor2& spin, const AntisymTensor2& H) {
    return p.m0 - p.magnetic_moment() / (2.0 * p.c * p.c) * contract_tt(H, spin);
}

FourVector lorentz_accel(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H) {
    return (p.charge / (p.m0 * p.c)) * contract_tv(H, v);
}

FourVector stern_gerlach_force(const ParticleParams& p, const ParticleState& s, const FieldSample& f) {
    const double mu = p.magnetic_moment();
    if (mu == 0.0 || !f.has_gradient()) return {};
    return (mu / 2.0) * contract_gradient(s.spin, orthogonal_derivative(f, s.v));
}

FourVector charge_accel(const ParticleParams& p, const ParticleState& s, const FieldSample& f) {
    const double m = spin_mass(p, s.spin, f.H);
    if (!(m > 0.0)) throw NumericError("spin mass is not positive; field exceeds the perturbative regime");
    const FourVector force = (p.charge / p.c) * contract_tv(f.H, s.v) + stern_gerlach_force(p, s, f);
    return force / m;
}

FourVector momentum_rate(const ParticleParams& p, const ParticleState& s, const FieldSample& f) {
    return (p.charge / p.c) * contract_tv(f.H, s.v) +
           (p.magnetic_moment() / 2.0) * contract_gradient(s.spin, f.grad);
}

double dm_dtau(const ParticleParams& p, const ParticleState& s, const FieldSample& f, MassRateMode mode) {
    const double mu = p.magnetic_moment();
    const double c2 = p.c * p.c;
    // v_l Pi_{ab} d^l H^{ab}
    const double along = contract_vv(s.v, contract_gradient(s.spin, f.grad));
    double rate = -mu / (2.0 * c2) * along;
    if (mode == MassRateMode::exact) {
        const FourVector w = charge_accel(p, s, f);
        rate += mu / (c2 * c2) * contract_vv(w, contract_tv(s.spin, contract_tv(f.H, s.v)));
    }
    return rate;
}

FourVector z_frenkel(const ParticleParams& p, const ParticleState& s, const FieldSample& f) {
    if (!f.has_gradient()) return noncollinearity(p, s, f.H, f.grad);
    return noncollinearity(p, s, f.H, orthogonal_derivative(f, s.v));
}

FourVector z_frenkel_accel(const ParticleParams& p, const ParticleState& s, const AntisymTensor2& H,
                           const FourVector& w) {
    const double c2 = p.c * p.c;
    return (p.hbar / (2.0 * c2)) * contract_tv(s.spin, w) -
           (p.magnetic_moment() / c2) * contract_tv(s.spin, contract_tv(H, s.v));
}

FourVector z_shirokov(const ParticleParams& p, const ParticleState& s, const FieldSample& f) {
    return noncollinearity(p, s, f.H, f.grad);
}

FourVector momentum(const ParticleParams& p, const ParticleState& s, const FieldSample& f, MomentumForm form) {
    const double m = spin_mass(p, s.spin, f.H);
    const FourVector z = form == MomentumForm::frenkel ? z_frenkel(p, s, f) : z_shirokov(p, s, f);
    return m * s.v + z;
}

FourVector spin_four_vector(const ParticleParams& p, const AntisymTensor2& spin, const FourVector& P) {
    require_timelike(P);
    return (1.0 / (p.m0 * p.c)) * contract_tv(dual(spin), P);
}

AntisymTensor2 tensor_from_spin_vector(const ParticleParams& p, const FourVector& S, const FourVector& P) {
    require_timelike(P);
    return (1.0 / (p.m0 * p.c)) * dual(bracket(S, P));
}

AntisymTensor2 project_orthogonal(const AntisymTensor2& spin, const FourVector& n) {
    const double n2 = -contract_vv(n, n);
    if (!(n2 > 0.0)) throw std::domain_error("projection direction must be time-like");
    const FourVector q = -contract_tv(spin, n);  // n_a Pi^{ab}
    return spin + (1.0 / n2) * bracket(n, q);
}

}  // namespace spindyn
