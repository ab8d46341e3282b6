#pragma once

#include <atomic>
#include <functional>

#include "jacklaurent/jsonio.hpp"

namespace jl {

struct VerifyOptions {
    int max_n = 3;
    int max_m = 3;
    int jobs = 1;
    std::atomic<bool>* interrupt = nullptr;  // optional cooperative stop flag
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool complete = true;
    long duration_ms = 0;
    std::vector<std::string> notes;
};

struct VerifySummary {
    std::vector<CriterionResult> criteria;
    bool all_passed = false;
    bool complete = true;
};

/// Runs the full property suite at the given bounds; exact arithmetic only.
VerifySummary run_verification(const VerifyOptions& opts);

Json to_json(const VerifySummary& s);

/// Index-deterministic parallel loop: fn(i) must only touch slot i of any output.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace jl
