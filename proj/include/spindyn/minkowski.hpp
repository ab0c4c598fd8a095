#pragma once

// Minkowski algebra with metric g = diag(-1, +1, +1, +1).
//
// All objects are stored contravariantly. Every contraction lowers indices
// explicitly; there is no covariant storage.

#include <array>
#include <ostream>

#include "spindyn/vec3.hpp"

namespace spindyn {

/// Metric component g_{mu mu} (diagonal).
constexpr double metric(int mu) { return mu == 0 ? -1.0 : 1.0; }

/// Contravariant 4-vector a^mu.
struct FourVector {
    std::array<double, 4> c{};

    constexpr FourVector() = default;
    constexpr FourVector(double a0, double a1, double a2, double a3) : c{a0, a1, a2, a3} {}
    constexpr FourVector(double a0, const Vec3& s) : c{a0, s.x, s.y, s.z} {}

    constexpr double operator[](int mu) const { return c[static_cast<std::size_t>(mu)]; }
    constexpr double& operator[](int mu) { return c[static_cast<std::size_t>(mu)]; }

    constexpr double time() const { return c[0]; }
    constexpr Vec3 spatial() const { return {c[1], c[2], c[3]}; }

    /// Covariant components a_mu = g_{mu nu} a^nu.
    constexpr FourVector lowered() const { return {-c[0], c[1], c[2], c[3]}; }
    /// Inverse of lowered(); identical map since g is its own inverse.
    constexpr FourVector raised() const { return {-c[0], c[1], c[2], c[3]}; }

    constexpr FourVector& operator+=(const FourVector& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    constexpr FourVector& operator-=(const FourVector& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    constexpr FourVector& operator*=(double s) {
        for (auto& x : c) x *= s;
        return *this;
    }

    friend constexpr bool operator==(const FourVector&, const FourVector&) = default;
};

constexpr FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
constexpr FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
constexpr FourVector operator-(FourVector a) { return a *= -1.0; }
constexpr FourVector operator*(double s, FourVector a) { return a *= s; }
constexpr FourVector operator*(FourVector a, double s) { return a *= s; }
constexpr FourVector operator/(FourVector a, double s) { return a *= (1.0 / s); }

/// Euclidean component norm, used only for residual reporting.
double component_norm(const FourVector& a);

/// Rank-2 antisymmetric tensor T^{alpha beta}, stored as
///   e = (T^{10}, T^{20}, T^{30})   (electric-like part)
///   b = (T^{23}, T^{31}, T^{12})   (magnetic-like part).
/// For the field tensor H this gives e = -E and b = B.
struct AntisymTensor2 {
    Vec3 e;
    Vec3 b;

    /// Full component T^{alpha beta} reconstructed from (e, b).
    double operator()(int alpha, int beta) const;

    using Matrix = std::array<std::array<double, 4>, 4>;
    Matrix to_matrix() const;
    /// Takes the antisymmetric part's independent components; the lower
    /// triangle is ignored.
    static AntisymTensor2 from_matrix(const Matrix& m);

    AntisymTensor2& operator+=(const AntisymTensor2& o) { e += o.e; b += o.b; return *this; }
    AntisymTensor2& operator-=(const AntisymTensor2& o) { e -= o.e; b -= o.b; return *this; }
    AntisymTensor2& operator*=(double s) { e *= s; b *= s; return *this; }

    friend bool operator==(const AntisymTensor2&, const AntisymTensor2&) = default;
};

inline AntisymTensor2 operator+(AntisymTensor2 a, const AntisymTensor2& b) { return a += b; }
inline AntisymTensor2 operator-(AntisymTensor2 a, const AntisymTensor2& b) { return a -= b; }
inline AntisymTensor2 operator-(AntisymTensor2 a) { return a *= -1.0; }
inline AntisymTensor2 operator*(double s, AntisymTensor2 a) { return a *= s; }
inline AntisymTensor2 operator*(AntisymTensor2 a, double s) { return a *= s; }

double component_norm(const AntisymTensor2& t);

/// g_{mu nu} a^mu b^nu.
double contract_vv(const FourVector& a, const FourVector& b);

/// u^rho = T^{rho lambda} v_lambda.
FourVector contract_tv(const AntisymTensor2& t, const FourVector& v);

/// A_{alpha beta} B^{alpha beta} = 2 (b_A . b_B - e_A . e_B).
double contract_tt(const AntisymTensor2& a, const AntisymTensor2& b);

/// a^{[alpha} b^{beta]} = a^alpha b^beta - a^beta b^alpha (no factor 1/2).
AntisymTensor2 bracket(const FourVector& a, const FourVector& b);

/// C^{alpha beta} = A^{alpha rho} B_rho^beta - A^{beta rho} B_rho^alpha.
AntisymTensor2 commutator_bracket(const AntisymTensor2& a, const AntisymTensor2& b);

/// Hodge dual (1/2) eps^{alpha beta rho sigma} T_{rho sigma} with eps^{0123} = +1.
/// In component form (e, b) -> (-b, e).
AntisymTensor2 dual(const AntisymTensor2& t);

/// Field tensor from lab-frame E and B: H^{i0} = -E_i, H^{23} = B_x, ...
AntisymTensor2 field_from_EB(const Vec3& E, const Vec3& B);

struct ElectricMagnetic {
    Vec3 E;
    Vec3 B;
};
ElectricMagnetic EB_from_field(const AntisymTensor2& h);

/// Pure boost. Acts actively: Boost(beta) carries the rest 4-velocity (c,0)
/// to c*gamma*(1, beta). Components in the frame moving with velocity beta
/// are therefore obtained with Boost(-beta).
class Boost {
public:
    /// Throws std::domain_error unless |beta| < 1.
    explicit Boost(const Vec3& beta);

    const Vec3& beta() const { return beta_; }
    double gamma() const { return gamma_; }

    /// Boost into the instantaneous rest frame of a particle with velocity beta.
    static Boost to_rest_frame_of(const Vec3& beta) { return Boost(-beta); }

private:
    Vec3 beta_;
    double gamma_;
};

FourVector boost_vector(const Boost& boost, const FourVector& a);
AntisymTensor2 boost_tensor(const Boost& boost, const AntisymTensor2& t);

std::ostream& operator<<(std::ostream& os, const FourVector& a);
std::ostream& operator<<(std::ostream& os, const AntisymTensor2& t);

}  // namespace spindyn
