#pragma once

#include <string>
#include <vector>

namespace ricci {

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The full invariant suite at grid size n (module properties from metric,
/// flow, profile, rosenau and comparison).  Each entry is an independent
/// check; the CLI prints them as a table.
std::vector<VerifyResult> run_verification(int n);

}  // namespace ricci
