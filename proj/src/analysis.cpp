#include "spindyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spindyn/dynamics.hpp"
#include "spindyn/spin.hpp"

namespace spindyn {

namespace {

Vec3 unit_or_z(const Vec3& a) {
    const double n = norm(a);
    return n > 0.0 ? a / n : Vec3{0, 0, 1};
}

Vec3 in_plane(const Vec3& v, const Vec3& n) { return v - dot(v, n) * n; }

// Fixed orthonormal pair spanning the plane normal to n.
void plane_basis(const Vec3& n, Vec3& u, Vec3& w) {
    const Vec3 seed = std::fabs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    u = in_plane(seed, n);
    u = u / norm(u);
    w = cross(n, u);
}

}  // namespace

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_line: sizes differ");
    if (x.size() < 2) throw std::invalid_argument("fit_line: need at least two points");
    const double n = static_cast<double>(x.size());
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
    }
    LinearFit fit;
    fit.samples = x.size();
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.level = ym;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (ym + fit.slope * (x[i] - xm));
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

std::vector<double> unwrap(const std::vector<double>& angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> out(angle.size());
    double offset = 0.0;
    for (std::size_t i = 0; i < angle.size(); ++i) {
        if (i > 0) {
            const double jump = angle[i] - angle[i - 1];
            offset -= two_pi * std::round(jump / two_pi);
        }
        out[i] = angle[i] + offset;
    }
    return out;
}

double spin_velocity_angle(const SpinVector& zeta, const Vec3& beta, const Vec3& axis) {
    const Vec3 n = unit_or_z(axis);
    const Vec3 z = in_plane(zeta, n), b = in_plane(beta, n);
    return std::atan2(dot(n, cross(b, z)), dot(b, z));
}

double plane_angle(const Vec3& v, const Vec3& axis) {
    const Vec3 n = unit_or_z(axis);
    Vec3 u, w;
    plane_basis(n, u, w);
    return std::atan2(dot(v, w), dot(v, u));
}

CircleFit fit_circle(const std::vector<Vec3>& points, const Vec3& axis) {
    if (points.size() < 3) throw std::invalid_argument("fit_circle: need at least three points");
    const Vec3 n = unit_or_z(axis);
    Vec3 u, w;
    plane_basis(n, u, w);
    // Centre the data first to keep the normal equations well conditioned.
    Vec3 mean;
    for (const auto& p : points) mean += p;
    mean = mean / static_cast<double>(points.size());

    // x^2 + y^2 + D x + E y + F = 0 in the least-squares sense.
    double A[3][3] = {}, rhs[3] = {};
    for (const auto& p : points) {
        const double x = dot(p - mean, u), y = dot(p - mean, w);
        const double row[3] = {x, y, 1.0};
        const double target = -(x * x + y * y);
        for (int i = 0; i < 3; ++i) {
            rhs[i] += row[i] * target;
            for (int j = 0; j < 3; ++j) A[i][j] += row[i] * row[j];
        }
    }
    // Gaussian elimination with partial pivoting.
    int perm[3] = {0, 1, 2};
    for (int k = 0; k < 3; ++k) {
        int piv = k;
        for (int i = k + 1; i < 3; ++i)
            if (std::fabs(A[perm[i]][k]) > std::fabs(A[perm[piv]][k])) piv = i;
        std::swap(perm[k], perm[piv]);
        const double d = A[perm[k]][k];
        if (d == 0.0) throw std::invalid_argument("fit_circle: points are collinear");
        for (int i = k + 1; i < 3; ++i) {
            const double f = A[perm[i]][k] / d;
            for (int j = k; j < 3; ++j) A[perm[i]][j] -= f * A[perm[k]][j];
            rhs[perm[i]] -= f * rhs[perm[k]];
        }
    }
    double sol[3];
    for (int k = 2; k >= 0; --k) {
        double s = rhs[perm[k]];
        for (int j = k + 1; j < 3; ++j) s -= A[perm[k]][j] * sol[j];
        sol[k] = s / A[perm[k]][k];
    }
    const double cx = -sol[0] / 2, cy = -sol[1] / 2;
    CircleFit fit;
    fit.radius = std::sqrt(std::max(0.0, cx * cx + cy * cy - sol[2]));
    fit.center = mean + cx * u + cy * w;
    double ss = 0.0;
    for (const auto& p : points) {
        const double x = dot(p - mean, u) - cx, y = dot(p - mean, w) - cy;
        const double e = std::hypot(x, y) - fit.radius;
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / static_cast<double>(points.size()));
    return fit;
}

SampledRun sampled(const Trajectory& traj) {
    SampledRun out;
    for (const auto& s : traj.samples) {
        out.tau.push_back(s.phase.tau);
        out.t.push_back(s.t);
        out.gamma.push_back(s.gamma);
        out.r.push_back(s.state.r.spatial());
        out.beta.push_back(velocity_beta(s.state.v));
        out.zeta.push_back(s.zeta);
    }
    return out;
}

SampledRun sampled(const CsvTable& table) {
    SampledRun out;
    out.tau = table.column("tau");
    out.t = table.column("t");
    out.gamma = table.column("gamma");
    const auto &x = table.column("x"), &y = table.column("y"), &z = table.column("z");
    const auto &bx = table.column("bx"), &by = table.column("by"), &bz = table.column("bz");
    const auto &zx = table.column("zx"), &zy = table.column("zy"), &zz = table.column("zz");
    for (std::size_t i = 0; i < table.rows; ++i) {
        out.r.push_back({x[i], y[i], z[i]});
        out.beta.push_back({bx[i], by[i], bz[i]});
        out.zeta.push_back({zx[i], zy[i], zz[i]});
    }
    return out;
}

PrecessionFit precession_fit(const SampledRun& run, const Vec3& axis) {
    std::vector<double> rel, vel, spin;
    for (std::size_t i = 0; i < run.t.size(); ++i) {
        rel.push_back(spin_velocity_angle(run.zeta[i], run.beta[i], axis));
        vel.push_back(plane_angle(run.beta[i], axis));
        spin.push_back(plane_angle(run.zeta[i], axis));
    }
    return {fit_line(run.t, unwrap(rel)), fit_line(run.t, unwrap(vel)), fit_line(run.t, unwrap(spin))};
}

ThomasCheck thomas_check(const SampledRun& run, const Scenario& scenario) {
    const ParticleParams& p = scenario.particle;
    const FieldModel model = scenario.field.model();
    ThomasCheck out;
    for (std::size_t i = 0; i < run.t.size(); ++i) {
        const FourVector v = four_velocity(run.beta[i], p.c);
        const AntisymTensor2 H = model.sample({p.c * run.t[i], run.r[i]}).H;
        const Vec3 formula = precession_split(p, v, H).thomas;
        const Vec3 a = lab_acceleration(v, lorentz_accel(p, v, H), p.c);
        const Vec3 kinematic = thomas_kinematic(p.c, run.beta[i], a);
        out.max_discrepancy = std::max(out.max_discrepancy, max_abs(formula - kinematic));
        out.max_thomas = std::max(out.max_thomas, norm(formula));
        ++out.samples;
    }
    return out;
}

std::vector<ColumnSummary> invariant_summary(const CsvTable& table) {
    std::vector<ColumnSummary> out;
    for (const auto& name : table.header) {
        if (name.rfind("res_", 0) != 0) continue;
        const auto& col = table.column(name);
        ColumnSummary s{name, 0.0, col.empty() ? 0.0 : col.back()};
        for (double v : col) s.max = std::max(s.max, v);
        out.push_back(s);
    }
    auto spread = [&](const std::string& name, const std::vector<double>& col) {
        if (col.empty()) return;
        const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
        out.push_back({name, *hi - *lo, col.back() - col.front()});
    };
    spread("m_spread", table.column("m"));
    std::vector<double> zn;
    const auto &zx = table.column("zx"), &zy = table.column("zy"), &zz = table.column("zz");
    for (std::size_t i = 0; i < table.rows; ++i) zn.push_back(norm(Vec3{zx[i], zy[i], zz[i]}));
    spread("zeta_norm_spread", zn);
    return out;
}

Vec3 precession_axis(const Scenario& scenario) {
    if (scenario.field.type == "uniform" && norm(scenario.field.B) > 0.0) return unit_or_z(scenario.field.B);
    return {0, 0, 1};
}

}  // namespace spindyn
