#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "spindyn/minkowski.hpp"

namespace spindyn {

/// Rank-3 array G[rho] = d^rho H^{alpha beta}; each slice is antisymmetric.
/// Note d^0 = -(1/c) d/dt.
using FieldGradient = std::array<AntisymTensor2, 4>;

/// Field tensor and its full gradient at one spacetime point.
struct FieldSample {
    AntisymTensor2 H;
    FieldGradient grad{};

    bool has_gradient() const;
};

struct UniformField {
    Vec3 E;
    Vec3 B;
};

/// B = (b*y, b*x, B0) ; curl- and divergence-free.
struct MagneticQuadrupole {
    double gradient = 0.0;
    double bz = 0.0;
};

/// E = (k*x, 0, 0). Has div E = k != 0, so it needs a source; kept only as
/// a test model for the electric gradient terms.
struct LinearEGradient {
    double k = 0.0;
};

/// Static analytic external field.
class FieldModel {
public:
    using Variant = std::variant<UniformField, MagneticQuadrupole, LinearEGradient>;

    FieldModel() = default;
    FieldModel(Variant v) : model_(v) {}  // NOLINT(google-explicit-constructor)

    static FieldModel uniform(const Vec3& E, const Vec3& B) { return {UniformField{E, B}}; }
    static FieldModel quadrupole(double gradient, double bz = 0.0) { return {MagneticQuadrupole{gradient, bz}}; }
    static FieldModel linear_e_gradient(double k) { return {LinearEGradient{k}}; }

    const Variant& variant() const { return model_; }

    /// "uniform", "magnetic-quadrupole" or "linear-E-gradient".
    std::string_view tag() const;
    /// Zero gradient everywhere.
    bool is_uniform() const;
    /// Violates the source-free Maxwell equations.
    bool nonphysical() const;

    /// Exact field and gradient at r; r^0 is ignored (static models).
    FieldSample sample(const FourVector& r) const;

private:
    Variant model_{UniformField{}};
};

/// Space-like derivative d->^rho H = d^rho H + (1/c^2) v^rho v_lambda d^lambda H.
/// Requires v on shell (v.v = -c^2 within 1e-9 relative), throws std::domain_error otherwise.
FieldGradient spacelike_derivative(const FieldSample& sample, const FourVector& v, double c);

/// Space-like part of a field: H + (1/c^2) v^{[alpha} v_rho H^{rho beta]}.
AntisymTensor2 spacelike_field(const AntisymTensor2& H, const FourVector& v, double c);

/// Same projections normalised by N^2 = -v.v instead of c^2, for any time-like v.
/// They agree with the two functions above on shell and are what the equations of
/// motion use, since Runge-Kutta stages leave the mass shell at O(h^2).
/// Throw std::domain_error unless v is time-like.
FieldGradient orthogonal_derivative(const FieldSample& sample, const FourVector& v);
AntisymTensor2 orthogonal_field(const AntisymTensor2& H, const FourVector& v);

/// X^rho = T_{ab} G[rho]^{ab}.
FourVector contract_gradient(const AntisymTensor2& t, const FieldGradient& grad);

/// Throws std::domain_error if |v.v + c^2| > tol * c^2.
void require_on_shell(const FourVector& v, double c, double tol = 1e-9);

}  // namespace spindyn
