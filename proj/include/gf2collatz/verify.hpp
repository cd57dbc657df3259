#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2collatz {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the invariant suites. Quick keeps the exhaustive scans small enough
// for interactive use; Full runs them at the sizes the library promises
// (degree <= 16 for the stopping-time bound, parity bijection to n = 14, ...).
std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream* progress = nullptr);

} // namespace gf2collatz
