#pragma once

#include <string>
#include <vector>

namespace oreg {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Property suites shared by the CLI `verify` command and the test binaries.
std::vector<CheckResult> verify_limits();
std::vector<CheckResult> verify_ca_equiv();
std::vector<CheckResult> verify_attractor();
std::vector<CheckResult> verify_consistency();
std::vector<CheckResult> verify_all();

} // namespace oreg
