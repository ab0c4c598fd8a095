#pragma once

// Independent runs and derivative evaluations fanned out over OpenMP threads.
// Each job writes only its own result slot, so the merged output is in input
// order whatever the thread count. The serial paths are the reference the
// parallel ones are tested against.

#include <string>
#include <vector>

#include "spindyn/integrator.hpp"
#include "spindyn/scenario.hpp"

namespace spindyn {

enum class Execution { serial, parallel };

/// out[i] = sys.derivative(in[i]). threads <= 0 leaves the OpenMP default.
void derivatives(const SpinSystem& sys, const std::vector<Phase>& in, std::vector<Phase>& out, Execution exec,
                 int threads = 0);

enum class ErrorKind { none, config, numeric, io };

struct RunOutcome {
    Trajectory trajectory;
    ErrorKind error = ErrorKind::none;
    std::string message;
    double wall_seconds = 0.0;

    bool ok() const { return error == ErrorKind::none; }
};

/// Run one scenario, turning library exceptions into an outcome.
RunOutcome run_scenario(const Scenario& scenario);

std::vector<RunOutcome> run_batch(const std::vector<Scenario>& scenarios, Execution exec, int threads = 0);

struct PairDeviation {
    Formulation a = Formulation::frenkel_corben;
    Formulation b = Formulation::frenkel_corben;
    bool excluded = false;
    std::string reason;  // "regime-excluded", or the failure message of a run
    Deviation deviation;
};

struct Comparison {
    std::vector<Formulation> formulations;
    std::vector<RunOutcome> runs;  // one per formulation, same order
    std::vector<PairDeviation> pairs;
};

/// Runs the scenario under each formulation and compares every pair. A
/// formulation that does not hold in the scenario field is not run and its
/// pairs are flagged "regime-excluded".
Comparison compare_formulations(const Scenario& scenario, const std::vector<Formulation>& formulations,
                                Execution exec, int threads = 0);

}  // namespace spindyn
