#pragma once

#include <string>
#include <vector>

namespace fibword {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Outcome of the full invariant suite: one CheckResult per invariant plus
// informational notices (errata and conventions worth surfacing).
struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notices;

    bool all_pass() const;
    std::string to_json() const;
};

VerifyReport run_verification(int threads = 1);

}  // namespace fibword
