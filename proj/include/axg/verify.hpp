#pragma once

#include "axg/independence.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace axg {

struct SuiteResult {
    std::string name;
    bool pass = false;
    long checked = 0;
    long disagreements = 0;
    long certificate_failures = 0;
    long budget_exhausted = 0;
    std::vector<std::string> counterexamples; // edge-list texts, capped per suite
    std::string note;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint64_t seed = 1;
    double scale = 1.0;     // corpus size multiplier; 0 runs every suite on an empty corpus
    bool parallel = true;   // corpus items across threads; per-item results merged in order
    bool inject_bug = false; // self-test: corrupt one tree verdict, must surface a counterexample
};

// Runs every verification suite; deterministic for fixed options.
std::vector<SuiteResult> run_verification(const VerifyOptions& opt);

// 0: all pass. 1: any disagreement or certificate failure. 3: budget
// exhaustion only.
int verification_exit_code(const std::vector<SuiteResult>& results);

} // namespace axg
