#pragma once

#include <string>

#include "spindyn/batch.hpp"
#include "spindyn/scenario.hpp"

namespace spindyn {

/// RunReport as pretty JSON: scenario echo, wall time, sample and step counts,
/// residual maxima and fitted observables. Every frequency is written
/// together with its fit residual.
std::string run_report(const Scenario& scenario, const RunOutcome& outcome, const std::string& csv_path);

/// Pairwise deviation table as pretty JSON.
std::string comparison_report(const Scenario& scenario, const Comparison& cmp);

/// Same table as aligned text for the terminal.
std::string comparison_table(const Comparison& cmp);

}  // namespace spindyn
