#pragma once

#include "cohocalc/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cohocalc {

/// Names accepted by repro(), excluding "all".
std::vector<std::string> repro_scenario_names();

/// Runs a named reproduction scenario (or "all") and returns its report.
/// Scenarios are independent: each one rebuilds what it needs.
Report repro(std::string_view scenario);

/// Presentation checks, randomized ring-axiom suites, the GRR-vs-closed-form
/// grid and the Segre and tensor-factorization identities.
Report selfcheck();

} // namespace cohocalc
