#ifndef ANNKH_CHECK_HPP
#define ANNKH_CHECK_HPP

#include <string>
#include <vector>

#include "annkh/tangle.hpp"

namespace annkh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckOptions {
    unsigned threads = 0;
    bool negative_control = false;  // corrupt one matrix entry and expect a failure report
};

// Runs every cross-module identity on a closed annular diagram; tangle-side
// identities run on the pre-closure tangle.
std::vector<CheckResult> run_full_check(const TangleDiagram& d, const CheckOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace annkh

#endif
