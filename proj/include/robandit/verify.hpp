// verify.hpp
//
// Named property suites run by `robandit verify`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robandit/distributions.hpp"

namespace robandit {

struct SuiteResult {
    std::string name;
    bool passed = false;
    double statistic = 0.0;  // measured quantity
    double bound = 0.0;      // what it was compared against
    std::string detail;
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, unsigned parallelism = 1);

// Empty selection runs every suite.
std::vector<SuiteResult> verify_suite(const std::vector<std::string>& selection,
                                      std::uint64_t seed, unsigned parallelism = 1);

// Distributions with unique median, MAD and second-order MAD used by the suites.
std::vector<Distribution> builtin_distributions();

} // namespace robandit
