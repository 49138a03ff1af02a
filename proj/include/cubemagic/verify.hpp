#pragma once

#include <string>
#include <vector>

#include "cubemagic/labelling.hpp"

namespace cubemagic {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // failure diagnostics, or a note such as "skipped"
};

// Cross-module invariant suites. max_sum bounds the exhaustive scans; checks
// that need larger sums than requested report as passed with a "skipped"
// note. All values compared exactly.
std::vector<CheckResult> verify_cone(Label max_sum);
std::vector<CheckResult> verify_symmetry(Label max_sum);
std::vector<CheckResult> verify_series(Label max_sum);
std::vector<CheckResult> verify_distinct(Label max_sum);
std::vector<CheckResult> verify_all(Label max_sum);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cubemagic
