#include "spindyn/spin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spindyn/errors.hpp"

namespace spindyn {

namespace {

double gamma_of(const Vec3& beta) { return 1.0 / std::sqrt(1.0 - dot(beta, beta)); }

}  // namespace

AntisymTensor2 spin_rate_general(const ParticleParams& p, const ParticleState& s, const FourVector& P,
                                 const FieldSample& f) {
    if (p.hbar == 0.0) throw std::domain_error("spin_rate_general needs hbar > 0");
    return (2.0 / p.hbar) * (p.magnetic_moment() * commutator_bracket(f.H, s.spin) - bracket(s.v, P));
}

AntisymTensor2 spin_rate_corben(const ParticleParams& p, const ParticleState& s, const FieldSample& f) {
    const double c = p.c;
    const double larmor = p.charge * p.g / (2.0 * p.m0 * c);
    FourVector y = ((p.g - 2.0) / 2.0 * p.charge / (p.m0 * c * c * c)) * contract_tv(f.H, s.v);
    const double mu = p.magnetic_moment();
    if (mu != 0.0 && f.has_gradient())
        y -= (mu / (2.0 * p.m0 * c * c)) * contract_gradient(s.spin, orthogonal_derivative(f, s.v));
    return larmor * commutator_bracket(f.H, s.spin) + bracket(s.v, contract_tv(s.spin, y));
}

AntisymTensor2 effective_field(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H) {
    return orthogonal_field(H, v) + thomas_field(p, v, H);
}

AntisymTensor2 spin_rate_effective(const ParticleParams& p, const ParticleState& s, const FieldSample& f) {
    if (f.has_gradient()) throw RegimeError("effective-field spin equation is valid for homogeneous fields only");
    const double larmor = p.charge * p.g / (2.0 * p.m0 * p.c);
    return larmor * commutator_bracket(effective_field(p, s.v, f.H), s.spin);
}

SpinVector zeta_from_spin(const AntisymTensor2& spin, const FourVector& v) {
    const Vec3 beta = velocity_beta(v);
    const double g = gamma_of(beta);
    return spin.b / g + (g / (g + 1.0) * dot(beta, spin.b)) * beta;
}

SpinVector zeta_from_state(const ParticleState& s) { return zeta_from_spin(s.spin, s.v); }

AntisymTensor2 state_spin_from_zeta(const SpinVector& zeta, const Vec3& beta) {
    if (!(dot(beta, beta) < 1.0)) throw std::domain_error("|beta| must be < 1");
    const double g = gamma_of(beta);
    const Vec3 b = g * zeta - (g * g / (g + 1.0) * dot(beta, zeta)) * beta;
    return {cross(beta, b), b};
}

Vec3 zeta_rate_uniform(const ParticleParams& p, const FourVector& v, const SpinVector& zeta,
                       const AntisymTensor2& H) {
    const auto [E, B] = EB_from_field(H);
    const Vec3 beta = velocity_beta(v);
    const double g = gamma_of(beta);
    const double k = p.charge / (p.m0 * p.c);
    const Vec3 bbB = cross(beta, cross(beta, B));
    return (p.g * k / 2.0) * cross(zeta, B) -
           ((p.g - 2.0) * k / 2.0 * g * g / (g + 1.0)) * cross(zeta, bbB) -
           (k * g * (p.g / 2.0 - g / (g + 1.0))) * cross(zeta, cross(beta, E));
}

Vec3 zeta_rate_gradient_term(const ParticleParams& p, const FourVector& v, const SpinVector& zeta,
                             const FieldSample& f) {
    if (!f.has_gradient() || p.hbar == 0.0) return {};
    const Vec3 beta = velocity_beta(v);
    const double g = gamma_of(beta);
    // grad of F = zeta.B + beta.(zeta x E) - gamma/(gamma+1) (beta.zeta)(beta.B)
    Vec3 gradF;
    for (int i = 0; i < 3; ++i) {
        const auto [dE, dB] = EB_from_field(f.grad[static_cast<std::size_t>(i + 1)]);
        gradF[i] = dot(zeta, dB) + dot(beta, cross(zeta, dE)) - g / (g + 1.0) * dot(beta, zeta) * dot(beta, dB);
    }
    const double coef = p.g * p.charge * p.hbar / (4.0 * p.m0 * p.m0 * p.c * p.c) * g * g / (g + 1.0);
    return coef * cross(zeta, cross(beta, gradF));
}

Vec3 zeta_rate(const ParticleParams& p, const FourVector& v, const SpinVector& zeta, const FieldSample& f) {
    return zeta_rate_uniform(p, v, zeta, f.H) + zeta_rate_gradient_term(p, v, zeta, f);
}

PrecessionSplit precession_split(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H) {
    const auto [E, B] = EB_from_field(H);
    const Vec3 beta = velocity_beta(v);
    const double g = gamma_of(beta);
    const double k = p.charge / (p.m0 * p.c);
    const Vec3 bE = cross(beta, E);
    const Vec3 bbB = cross(beta, cross(beta, B));
    return {-(p.g * k / 2.0) * (B / g - bE - (g / (g + 1.0)) * bbB), -(k * g / (g + 1.0)) * (bE + bbB)};
}

PrecessionSplit precession_split_rest_frame(const ParticleParams& p, const FourVector& v,
                                            const AntisymTensor2& H) {
    const Vec3 beta = velocity_beta(v);
    const Boost to_rest = Boost::to_rest_frame_of(beta);
    const auto [E0, B0] = EB_from_field(boost_tensor(to_rest, H));
    const double g = to_rest.gamma();
    const double k = p.charge / (p.m0 * p.c);
    return {-(p.g * k / 2.0 / g) * B0, -(k / (g + 1.0)) * cross(beta, E0)};
}

Vec3 thomas_kinematic(double c, const Vec3& beta, const Vec3& accel) {
    const double g = gamma_of(beta);
    return -(g * g / ((g + 1.0) * c)) * cross(beta, accel);
}

Vec3 lab_acceleration(const FourVector& v, const FourVector& dv_dtau, double c) {
    // beta = v_s / v^0 ; dt/dtau = v^0 / c
    const double v0 = v[0];
    const Vec3 dbeta_dtau = (dv_dtau.spatial() * v0 - v.spatial() * dv_dtau[0]) / (v0 * v0);
    return (c * c / v0) * dbeta_dtau;
}

AntisymTensor2 thomas_field(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H) {
    const FourVector w = lorentz_accel(p, v, H);
    return (2.0 * p.m0 / (p.charge * p.g * p.c)) * bracket(v, w);
}

AntisymTensor2 thomas_dual(const ParticleParams& p, const FourVector& v, const AntisymTensor2& H) {
    return dual(thomas_field(p, v, H));
}

double SpinFieldInvariant::spread() const {
    const double hi = std::max({full, spacelike, effective, rest_frame});
    const double lo = std::min({full, spacelike, effective, rest_frame});
    return hi - lo;
}

SpinFieldInvariant spin_field_invariant(const ParticleParams& p, const ParticleState& s, const AntisymTensor2& H) {
    SpinFieldInvariant out;
    out.full = 0.5 * contract_tt(H, s.spin);
    out.spacelike = 0.5 * contract_tt(orthogonal_field(H, s.v), s.spin);
    out.effective = 0.5 * contract_tt(effective_field(p, s.v, H), s.spin);
    const Vec3 beta = velocity_beta(s.v);
    const Vec3 B0 = EB_from_field(boost_tensor(Boost::to_rest_frame_of(beta), H)).B;
    out.rest_frame = dot(zeta_from_state(s), B0);
    return out;
}

}  // namespace spindyn
