// experiment.hpp
//
// Runs a parsed configuration and writes its CSV and summary files.
#pragma once

#include <string>
#include <vector>

#include "robandit/config.hpp"

namespace robandit {

struct ExperimentOutcome {
    int exit_code = 0;  // 0 ok, 1 experiment-level failure
    std::vector<std::string> files;  // paths written, in order
    std::string summary;             // same text as the summary file
};

// Replication i is seeded with derive_seed(config.seed, i); output does not
// depend on parallelism.
ExperimentOutcome run_experiment(const ExperimentConfig& config, unsigned parallelism = 1);

// printf("%.17g"), with "nan"/"inf" spelled the same on every platform.
std::string format_number(double x);

} // namespace robandit
