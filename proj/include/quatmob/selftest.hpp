#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quatmob {

struct SuiteResult {
    std::string name;
    int iterations = 0;
    double max_error = 0.0;  ///< worst observed defect, in the suite's own units
    double tolerance = 0.0;
    bool passed = true;
};

/// Randomized invariant checks over every module; `iters` scales the number
/// of samples per suite. Deterministic for a given seed.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, int iters);

}  // namespace quatmob
