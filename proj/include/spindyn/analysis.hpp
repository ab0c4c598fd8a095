#pragma once

// Post-processing of sampled trajectories: frequency fits, the two Thomas
// frequency expressions, and residual summaries.

#include <string>
#include <vector>

#include "spindyn/output.hpp"
#include "spindyn/scenario.hpp"

namespace spindyn {

/// Least-squares line y = slope * (x - x_mean) + level. Both slope and
/// residual are unchanged by a shift of x.
struct LinearFit {
    double slope = 0.0;
    double level = 0.0;     // fitted y at the mean x
    double residual = 0.0;  // RMS of y - fit
    std::size_t samples = 0;
};

/// Throws std::invalid_argument for fewer than two points or sizes that differ.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Removes 2 pi jumps between consecutive angles.
std::vector<double> unwrap(const std::vector<double>& angle);

/// Signed angle from the in-plane part of beta to the in-plane part of zeta,
/// measured about `axis`. Zero when either projection vanishes.
double spin_velocity_angle(const SpinVector& zeta, const Vec3& beta, const Vec3& axis);

/// Orientation of v's in-plane part about `axis`, measured from a fixed in-plane basis.
double plane_angle(const Vec3& v, const Vec3& axis);

struct CircleFit {
    Vec3 center;
    double radius = 0.0;
    double residual = 0.0;  // RMS of |r - center| - radius
};

/// Algebraic circle fit of positions projected onto the plane normal to `axis`.
CircleFit fit_circle(const std::vector<Vec3>& points, const Vec3& axis);

/// Columns needed by the analyses, taken either from a run or from its CSV.
struct SampledRun {
    std::vector<double> tau, t, gamma;
    std::vector<Vec3> r, beta, zeta;
};

SampledRun sampled(const Trajectory& traj);
SampledRun sampled(const CsvTable& table);

struct PrecessionFit {
    LinearFit relative;  // spin-velocity angle vs lab time: the anomalous frequency
    LinearFit velocity;  // velocity direction vs lab time: the cyclotron frequency
    LinearFit spin;      // spin direction vs lab time
};

PrecessionFit precession_fit(const SampledRun& run, const Vec3& axis);

struct ThomasCheck {
    double max_discrepancy = 0.0;  // max component difference between the two expressions
    double max_thomas = 0.0;       // largest |Omega_Th| seen, for scale
    std::size_t samples = 0;
};

/// Per sample: Omega_Th from the field formula and from -(1/c) gamma^2/(gamma+1) beta x a,
/// with a the Lorentz acceleration in the scenario field.
ThomasCheck thomas_check(const SampledRun& run, const Scenario& scenario);

struct ColumnSummary {
    std::string name;
    double max = 0.0;
    double last = 0.0;
};

/// Max and final value of every res_* column, plus the spread of m and |zeta|.
std::vector<ColumnSummary> invariant_summary(const CsvTable& table);

/// Precession axis for a scenario: the uniform B direction when there is one, else z.
Vec3 precession_axis(const Scenario& scenario);

}  // namespace spindyn
