#include "spindyn/batch.hpp"

#include <chrono>

#include <omp.h>

#include "spindyn/errors.hpp"

namespace spindyn {

void derivatives(const SpinSystem& sys, const std::vector<Phase>& in, std::vector<Phase>& out, Execution exec,
                 int threads) {
    out.resize(in.size());
    const auto n = static_cast<std::ptrdiff_t>(in.size());
    if (exec == Execution::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = sys.derivative(in[i]);
        return;
    }
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = sys.derivative(in[i]);
}

RunOutcome run_scenario(const Scenario& scenario) {
    RunOutcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        const SpinSystem sys = scenario.system();
        out.trajectory = run(scenario.integrator, sys, scenario.initial_phase(sys));
    } catch (const ConfigError& e) {
        out.error = ErrorKind::config;
        out.message = e.what();
    } catch (const NumericError& e) {
        out.error = ErrorKind::numeric;
        out.message = e.what();
    } catch (const IoError& e) {
        out.error = ErrorKind::io;
        out.message = e.what();
    } catch (const std::invalid_argument& e) {
        out.error = ErrorKind::config;
        out.message = e.what();
    } catch (const std::domain_error& e) {
        out.error = ErrorKind::numeric;
        out.message = e.what();
    }
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<RunOutcome> run_batch(const std::vector<Scenario>& scenarios, Execution exec, int threads) {
    std::vector<RunOutcome> out(scenarios.size());
    const auto n = static_cast<std::ptrdiff_t>(scenarios.size());
    if (exec == Execution::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = run_scenario(scenarios[i]);
        return out;
    }
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = run_scenario(scenarios[i]);
    return out;
}

Comparison compare_formulations(const Scenario& scenario, const std::vector<Formulation>& formulations,
                                Execution exec, int threads) {
    Comparison cmp;
    cmp.formulations = formulations;
    const FieldModel model = scenario.field.model();

    std::vector<Scenario> jobs;
    std::vector<std::size_t> slot(formulations.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < formulations.size(); ++i) {
        if (!supports(formulations[i], model)) continue;
        Scenario s = scenario;
        s.formulation = formulations[i];
        slot[i] = jobs.size();
        jobs.push_back(std::move(s));
    }
    std::vector<RunOutcome> done = run_batch(jobs, exec, threads);

    cmp.runs.resize(formulations.size());
    for (std::size_t i = 0; i < formulations.size(); ++i) {
        if (slot[i] == static_cast<std::size_t>(-1)) {
            cmp.runs[i].error = ErrorKind::config;
            cmp.runs[i].message = "regime-excluded";
        } else {
            cmp.runs[i] = std::move(done[slot[i]]);
        }
    }

    for (std::size_t i = 0; i < formulations.size(); ++i)
        for (std::size_t j = i + 1; j < formulations.size(); ++j) {
            PairDeviation p;
            p.a = formulations[i];
            p.b = formulations[j];
            const RunOutcome &ra = cmp.runs[i], &rb = cmp.runs[j];
            if (slot[i] == static_cast<std::size_t>(-1) || slot[j] == static_cast<std::size_t>(-1)) {
                p.excluded = true;
                p.reason = "regime-excluded";
            } else if (!ra.ok() || !rb.ok()) {
                p.excluded = true;
                p.reason = !ra.ok() ? ra.message : rb.message;
            } else {
                p.deviation = compare(ra.trajectory, rb.trajectory);
            }
            cmp.pairs.push_back(std::move(p));
        }
    return cmp;
}

}  // namespace spindyn
