#include "spindyn/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace spindyn {

double component_norm(const FourVector& a) {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

double component_norm(const AntisymTensor2& t) { return std::sqrt(dot(t.e, t.e) + dot(t.b, t.b)); }

double AntisymTensor2::operator()(int alpha, int beta) const {
    if (alpha == beta) return 0.0;
    if (beta == 0) return e[alpha - 1];
    if (alpha == 0) return -e[beta - 1];
    // Spatial block: T^{ij} = eps_{ijk} b_k.
    const int k = 6 - alpha - beta;  // the remaining spatial index
    const bool cyclic = (alpha == 1 && beta == 2) || (alpha == 2 && beta == 3) || (alpha == 3 && beta == 1);
    return cyclic ? b[k - 1] : -b[k - 1];
}

AntisymTensor2::Matrix AntisymTensor2::to_matrix() const {
    Matrix m{};
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) m[a][c] = (*this)(a, c);
    return m;
}

AntisymTensor2 AntisymTensor2::from_matrix(const Matrix& m) {
    return {{m[1][0], m[2][0], m[3][0]}, {m[2][3], m[3][1], m[1][2]}};
}

double contract_vv(const FourVector& a, const FourVector& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

FourVector contract_tv(const AntisymTensor2& t, const FourVector& v) {
    const Vec3 vs = v.spatial();
    const Vec3 s = -v[0] * t.e + cross(vs, t.b);
    return {-dot(t.e, vs), s};
}

double contract_tt(const AntisymTensor2& a, const AntisymTensor2& b) {
    return 2.0 * (dot(a.b, b.b) - dot(a.e, b.e));
}

AntisymTensor2 bracket(const FourVector& a, const FourVector& b) {
    const Vec3 as = a.spatial();
    const Vec3 bs = b.spatial();
    return {b[0] * as - a[0] * bs, cross(as, bs)};
}

AntisymTensor2 commutator_bracket(const AntisymTensor2& a, const AntisymTensor2& b) {
    return {cross(b.e, a.b) + cross(b.b, a.e), cross(a.e, b.e) - cross(a.b, b.b)};
}

AntisymTensor2 dual(const AntisymTensor2& t) { return {-t.b, t.e}; }

AntisymTensor2 field_from_EB(const Vec3& E, const Vec3& B) { return {-E, B}; }

ElectricMagnetic EB_from_field(const AntisymTensor2& h) { return {-h.e, h.b}; }

Boost::Boost(const Vec3& beta) : beta_(beta) {
    const double b2 = dot(beta, beta);
    if (!(b2 < 1.0)) throw std::domain_error("Boost: |beta| must be < 1");
    gamma_ = 1.0 / std::sqrt(1.0 - b2);
}

FourVector boost_vector(const Boost& boost, const FourVector& a) {
    const Vec3& beta = boost.beta();
    const double g = boost.gamma();
    const Vec3 as = a.spatial();
    const double bdota = dot(beta, as);
    const Vec3 s = as + (g * g / (g + 1.0) * bdota + g * a[0]) * beta;
    return {g * (a[0] + bdota), s};
}

AntisymTensor2 boost_tensor(const Boost& boost, const AntisymTensor2& t) {
    const Vec3& beta = boost.beta();
    const double g = boost.gamma();
    const double k = g * g / (g + 1.0);
    return {g * (t.e + cross(beta, t.b)) - k * dot(beta, t.e) * beta,
            g * (t.b - cross(beta, t.e)) - k * dot(beta, t.b) * beta};
}

std::ostream& operator<<(std::ostream& os, const FourVector& a) {
    return os << '(' << a[0] << "; " << a[1] << ", " << a[2] << ", " << a[3] << ')';
}

std::ostream& operator<<(std::ostream& os, const AntisymTensor2& t) {
    return os << "{e=" << t.e << ", b=" << t.b << '}';
}

}  // namespace spindyn
