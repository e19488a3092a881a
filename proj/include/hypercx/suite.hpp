#ifndef HYPERCX_SUITE_HPP
#define HYPERCX_SUITE_HPP

#include "hypercx/report.hpp"

#include <cstdint>

namespace hypercx {

struct SuiteOptions {
    std::uint64_t seed = 0x5eed0001ULL;
};

struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = false;
    std::vector<CheckResult> checks;
};

/// Runs the full verification battery (deterministic for a fixed seed).
/// A criterion passes when every asserted check inside it passes.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});

} // namespace hypercx

#endif
