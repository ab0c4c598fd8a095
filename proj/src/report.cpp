#include "spindyn/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "spindyn/analysis.hpp"
#include "spindyn/output.hpp"

namespace spindyn {

using nlohmann::ordered_json;

namespace {

ordered_json fit_json(const LinearFit& f) {
    return {{"omega", f.slope}, {"residual", f.residual}, {"samples", f.samples}};
}

ordered_json residuals_json(const Residuals& r) {
    return {{"vv", r.vv},
            {"supplementary", r.supplementary},
            {"spin_norm", r.spin_norm},
            {"mass_shell", r.mass_shell},
            {"invariant_spread", r.invariant_spread},
            {"mass_bookkeeping", r.mass_bookkeeping}};
}

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::none: return "none";
        case ErrorKind::config: return "config";
        case ErrorKind::numeric: return "numeric";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace

std::string run_report(const Scenario& scenario, const RunOutcome& outcome, const std::string& csv_path) {
    ordered_json j;
    j["scenario"] = ordered_json::parse(serialize_scenario(scenario));
    j["csv"] = {{"path", csv_path}, {"schema_version", kCsvSchemaVersion}};
    j["wall_seconds"] = outcome.wall_seconds;
    j["error"] = {{"kind", kind_name(outcome.error)}, {"message", outcome.message}};
    const Trajectory& traj = outcome.trajectory;
    j["samples"] = traj.samples.size();
    j["steps"] = traj.diagnostics.steps;
    j["rejected_steps"] = traj.diagnostics.rejected_steps;
    j["max_residuals"] = residuals_json(traj.diagnostics.max);

    ordered_json obs = ordered_json::object();
    if (traj.samples.size() >= 3) {
        const SampledRun run = sampled(traj);
        const Vec3 axis = precession_axis(scenario);
        const PrecessionFit fit = precession_fit(run, axis);
        obs["axis"] = {axis.x, axis.y, axis.z};
        obs["anomalous_precession"] = fit_json(fit.relative);
        obs["velocity_rotation"] = fit_json(fit.velocity);
        obs["spin_rotation"] = fit_json(fit.spin);
        try {
            const CircleFit c = fit_circle(run.r, axis);
            obs["orbit_radius"] = {{"value", c.radius}, {"residual", c.residual}};
        } catch (const std::invalid_argument&) {
            obs["orbit_radius"] = nullptr;  // straight line
        }
    }
    j["observables"] = obs;
    return j.dump(2) + "\n";
}

std::string comparison_report(const Scenario& scenario, const Comparison& cmp) {
    ordered_json j;
    j["scenario"] = ordered_json::parse(serialize_scenario(scenario));
    ordered_json runs = ordered_json::array();
    for (std::size_t i = 0; i < cmp.formulations.size(); ++i) {
        const RunOutcome& r = cmp.runs[i];
        runs.push_back({{"formulation", std::string(to_string(cmp.formulations[i]))},
                        {"error", kind_name(r.error)},
                        {"message", r.message},
                        {"wall_seconds", r.wall_seconds},
                        {"max_residuals", residuals_json(r.trajectory.diagnostics.max)}});
    }
    j["runs"] = runs;
    ordered_json pairs = ordered_json::array();
    for (const auto& p : cmp.pairs) {
        ordered_json e = {{"a", std::string(to_string(p.a))}, {"b", std::string(to_string(p.b))}};
        if (p.excluded) {
            e["excluded"] = p.reason;
        } else {
            e["zeta"] = p.deviation.zeta;
            e["position"] = p.deviation.position;
            e["gamma"] = p.deviation.gamma;
        }
        pairs.push_back(e);
    }
    j["pairs"] = pairs;
    return j.dump(2) + "\n";
}

std::string comparison_table(const Comparison& cmp) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-18s %-18s %12s %12s %12s\n", "a", "b", "zeta", "position", "gamma");
    out << line;
    for (const auto& p : cmp.pairs) {
        const std::string a(to_string(p.a)), b(to_string(p.b));
        if (p.excluded)
            std::snprintf(line, sizeof line, "%-18s %-18s %s\n", a.c_str(), b.c_str(), p.reason.c_str());
        else
            std::snprintf(line, sizeof line, "%-18s %-18s %12.4e %12.4e %12.4e\n", a.c_str(), b.c_str(),
                          p.deviation.zeta, p.deviation.position, p.deviation.gamma);
        out << line;
    }
    return out.str();
}

}  // namespace spindyn
