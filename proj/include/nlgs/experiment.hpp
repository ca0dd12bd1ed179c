#pragma once

#include <iosfwd>
#include <string>

#include "nlgs/config.hpp"

namespace nlgs {

/// Execute one experiment, writing its artifact files under the output
/// directory. Throws ConfigError for invalid configurations and
/// DivergenceError when time integration blows up (the most recent
/// checkpoint file is left in place).
void run_experiment(const RunConfig& config);

/// Quick built-in invariant suite (--seed-check). Prints one pass/fail line
/// per check; returns the number of failures.
int seed_check(std::ostream& out);

/// Simulation entry shared by the simulate/compare drivers; returns the run
/// result after writing profile/history artifacts into dir.
RunResult simulate_into(const RunConfig& config, const std::string& dir);

}  // namespace nlgs
