#pragma once

// Test-only oracles. These work on dense 4x4 component arrays with explicit
// metric factors and a brute-force Levi-Civita symbol, so they share no code
// path with the (e, b) closed forms in the library.

#include <array>
#include <cmath>
#include <random>

#include "spindyn/minkowski.hpp"
#include "spindyn/particle.hpp"
#include "spindyn/spin.hpp"

namespace oracle {

using spindyn::AntisymTensor2;
using spindyn::FourVector;
using spindyn::Vec3;
using Mat = std::array<std::array<double, 4>, 4>;

inline double g(int mu) { return mu == 0 ? -1.0 : 1.0; }

/// Dense components T^{ab} built directly from the storage convention.
inline Mat dense(const AntisymTensor2& t) {
    Mat m{};
    m[1][0] = t.e.x; m[2][0] = t.e.y; m[3][0] = t.e.z;
    m[0][1] = -t.e.x; m[0][2] = -t.e.y; m[0][3] = -t.e.z;
    m[2][3] = t.b.x; m[3][2] = -t.b.x;
    m[3][1] = t.b.y; m[1][3] = -t.b.y;
    m[1][2] = t.b.z; m[2][1] = -t.b.z;
    return m;
}

inline AntisymTensor2 undense(const Mat& m) {
    return {{m[1][0], m[2][0], m[3][0]}, {m[2][3], m[3][1], m[1][2]}};
}

inline double antisymmetry_defect(const Mat& m) {
    double d = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) d = std::fmax(d, std::fabs(m[a][b] + m[b][a]));
    return d;
}

/// Levi-Civita symbol with eps^{0123} = +1, by counting inversions.
inline double levi_civita(int a, int b, int c, int d) {
    const int p[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] == p[j]) return 0.0;
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1.0 : -1.0;
}

inline double vv(const FourVector& a, const FourVector& b) {
    double s = 0.0;
    for (int m = 0; m < 4; ++m) s += g(m) * a[m] * b[m];
    return s;
}

/// T^{r l} v_l
inline FourVector tv(const Mat& t, const FourVector& v) {
    FourVector u;
    for (int r = 0; r < 4; ++r)
        for (int l = 0; l < 4; ++l) u[r] += t[r][l] * g(l) * v[l];
    return u;
}

/// A_{ab} B^{ab}
inline double tt(const Mat& a, const Mat& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += g(i) * g(j) * a[i][j] * b[i][j];
    return s;
}

/// A^{a r} B_r^b - A^{b r} B_r^a
inline Mat commutator(const Mat& a, const Mat& b) {
    Mat m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int r = 0; r < 4; ++r) m[i][j] += a[i][r] * g(r) * b[r][j] - a[j][r] * g(r) * b[r][i];
    return m;
}

/// (1/2) eps^{ab rs} T_{rs}
inline Mat dual(const Mat& t) {
    Mat m{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s) m[a][b] += 0.5 * levi_civita(a, b, r, s) * g(r) * g(s) * t[r][s];
    return m;
}

/// a^a b^b - a^b b^a
inline Mat bracket(const FourVector& a, const FourVector& b) {
    Mat m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a[i] * b[j] - a[j] * b[i];
    return m;
}

/// Active boost matrix Lambda^mu_nu carrying (c,0) to c gamma (1, beta).
inline Mat boost_matrix(const Vec3& beta) {
    const double b2 = spindyn::dot(beta, beta);
    const double gm = 1.0 / std::sqrt(1.0 - b2);
    Mat L{};
    L[0][0] = gm;
    for (int i = 0; i < 3; ++i) {
        L[0][i + 1] = gm * beta[i];
        L[i + 1][0] = gm * beta[i];
        for (int j = 0; j < 3; ++j)
            L[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + (b2 > 0 ? (gm - 1.0) * beta[i] * beta[j] / b2 : 0.0);
    }
    return L;
}

inline FourVector apply(const Mat& L, const FourVector& a) {
    FourVector out;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) out[m] += L[m][n] * a[n];
    return out;
}

/// Lambda T Lambda^T
inline Mat conjugate(const Mat& L, const Mat& t) {
    Mat out{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n) out[a][b] += L[a][m] * L[b][n] * t[m][n];
    return out;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d = std::fmax(d, std::fabs(a[i][j] - b[i][j]));
    return d;
}

inline double max_abs_diff(const FourVector& a, const FourVector& b) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::fmax(d, std::fabs(a[i] - b[i]));
    return d;
}

inline double max_abs_diff(const AntisymTensor2& a, const AntisymTensor2& b) {
    return std::fmax(spindyn::max_abs(a.e - b.e), spindyn::max_abs(a.b - b.b));
}

inline double max_abs(const AntisymTensor2& a) { return std::fmax(spindyn::max_abs(a.e), spindyn::max_abs(a.b)); }

/// Deterministic random inputs for property tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    Vec3 vec(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }
    Vec3 beta(double max_speed = 0.95) {
        Vec3 d = vec();
        while (spindyn::norm(d) < 1e-3) d = vec();
        return (uniform(0.0, max_speed) / spindyn::norm(d)) * d;
    }
    Vec3 unit() {
        Vec3 d = vec();
        while (spindyn::norm(d) < 1e-3) d = vec();
        return d / spindyn::norm(d);
    }
    FourVector four(double scale = 1.0) { return {uniform(-scale, scale), vec(scale)}; }
    AntisymTensor2 tensor(double scale = 1.0) { return {vec(scale), vec(scale)}; }

private:
    std::mt19937_64 rng_;
};

/// On-shell velocity and Frenkel-consistent spin with |zeta| = 1.
inline spindyn::ParticleState random_state(Gen& gen, double c = 1.0, double max_speed = 0.95) {
    const Vec3 beta = gen.beta(max_speed);
    const Vec3 zeta = gen.unit();
    return {0.0, {0.0, gen.vec()}, spindyn::four_velocity(beta, c), spindyn::state_spin_from_zeta(zeta, beta)};
}

}  // namespace oracle
