#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uhp {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // achieved margins next to the pinned bounds
};

// Runs the twelve gate checks in order, streaming one
// "[PASS]/[FAIL] k. name: detail" line to `log` as each finishes. `full`
// selects the contract sizes (degrees up to 800); otherwise a sub-minute
// profile capped at degree 200 stands in, with the size-dependent bounds
// rescaled to the smaller degree and everything else unchanged. A thrown
// exception fails the criterion that raised it and carries its message
// into the detail column.
std::vector<CriterionResult> run_acceptance(bool full, std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace uhp
