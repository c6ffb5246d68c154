#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace holant::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The oracle-equivalence suite: each check compares a library operation
/// against an independent computation on a fixed seeded corpus.
std::vector<CheckResult> run_selftest(std::ostream *progress = nullptr);

}  // namespace holant::checks
