// The self-test battery: property checks on randomized inputs plus the
// regression table of known index/nullity values, runnable from the CLI.

#ifndef TORUSSPEC_SELFTEST_HPP
#define TORUSSPEC_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace torusspec::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // failure explanation or short success note
};

struct Options {
    std::uint64_t seed = 12345;
    int cutoff = 8;   // sweep depth for the regression table
    int grid_n = 16;  // oracle grid
};

std::vector<CheckResult> run(const Options& opts);

} // namespace torusspec::selftest

#endif
