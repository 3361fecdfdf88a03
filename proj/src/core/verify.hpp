#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace park {

struct VerifyCheck {
    std::string name;
    bool ok = false;
    std::string detail;  // optional, filled on failure or for reported values
};

struct VerifySuiteResult {
    std::string suite;
    bool passed = false;
    std::vector<VerifyCheck> checks;
};

// suites: identities, convolution, series, time-solution, dyck,
// combinatorics-oracle, discrepancies, montecarlo, all
VerifySuiteResult run_verify_suite(const std::string& suite, std::int64_t n_max,
                                   std::uint64_t trials, std::uint64_t seed);

std::vector<std::string> verify_suite_names();

}  // namespace park
