// Runs the full verification battery and prints one line per criterion.
// Exit code is the number of failed criteria.

#include "hypercx/suite.hpp"

#include <cstdio>
#include <cstdlib>

int main() {
    hypercx::SuiteOptions options;
    if (const char* env = std::getenv("HYPERCX_SEED"))
        options.seed = std::strtoull(env, nullptr, 10);

    auto results = hypercx::run_acceptance_suite(options);
    int failures = 0;
    for (const auto& criterion : results) {
        std::printf("criterion %2d [%s] %s\n", criterion.index,
                    criterion.pass ? "PASS" : "FAIL", criterion.title.c_str());
        if (!criterion.pass) {
            ++failures;
            for (const auto& check : criterion.checks) {
                if (check.pass.has_value() && !*check.pass)
                    std::printf("    failed: %s  value=%s\n", check.id.c_str(),
                                check.value.dump().c_str());
            }
        }
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures;
}
