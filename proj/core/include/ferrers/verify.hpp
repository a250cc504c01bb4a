#pragma once

// Identity-check suites: each recomputes an identity by two routes and
// reports whether they agree.

#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double millis = 0.0;
};

struct VerifyOptions {
    // Cell bound for the shape sweeps (equinumerous, column-perm, reflections).
    int maxCells = 12;
    int jobs = 0;
};

// Suite names accepted by runSuite, in the order "all" runs them.
const std::vector<std::string>& suiteNames();

// Runs one named suite, or every suite for "all". Throws ValidationError for
// an unknown name.
std::vector<CheckResult> runSuite(std::string_view name, const VerifyOptions& options = {});

CheckResult checkEquinumerous(const VerifyOptions& options);
CheckResult checkGenocchi(const VerifyOptions& options);
CheckResult checkMedianGenocchi(const VerifyOptions& options);
CheckResult checkCodecs(const VerifyOptions& options);
CheckResult checkGolden(const VerifyOptions& options);
CheckResult checkPolyBernoulli(const VerifyOptions& options);
CheckResult checkColumnPermutations(const VerifyOptions& options);
CheckResult checkReflectionSuite(const VerifyOptions& options);
CheckResult checkFourCycles(const VerifyOptions& options);

}  // namespace ferrers
