// Acceptance suite: one line per criterion, exact arithmetic, nonzero exit on
// any failure. Criterion bounds are pinned here, not configurable.

#include <cstdlib>
#include <iostream>

#include "jacklaurent/verify.hpp"

int main() {
    jl::VerifyOptions opts;
    opts.max_n = 3;
    opts.max_m = 3;
    if (const char* jobs = std::getenv("JACKLAURENT_JOBS"))
        opts.jobs = std::max(1, std::atoi(jobs));
    else
        opts.jobs = 4;

    jl::VerifySummary summary = jl::run_verification(opts);
    for (const auto& c : summary.criteria) {
        std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << " (" << c.duration_ms << " ms)\n";
        for (const auto& n : c.notes) std::cout << "        " << n << "\n";
    }
    std::cout << (summary.all_passed ? "ACCEPTANCE: all criteria passed"
                                     : "ACCEPTANCE: FAILURES PRESENT")
              << "\n";
    return summary.all_passed && summary.complete ? 0 : 1;
}
