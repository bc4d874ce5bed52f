// Acceptance gate: runs the full cross-validation harness at default scale,
// prints one line per criterion, then exercises the harness's own failure
// detection (an injected fault must surface, an empty corpus must pass
// vacuously). Exits nonzero when anything is off.

#include "axg/verify.hpp"

#include <cstdio>
#include <string>

namespace {

void print_suite(int number, const axg::SuiteResult& s) {
    std::printf("criterion %2d: %-34s %s  checked=%ld disagreements=%ld cert-failures=%ld "
                "budget-exhausted=%ld (%.1fs)\n",
                number, s.name.c_str(), s.pass ? "PASS" : "FAIL", s.checked, s.disagreements,
                s.certificate_failures, s.budget_exhausted, s.seconds);
    if (!s.note.empty()) std::printf("              note: %s\n", s.note.c_str());
    for (const auto& ce : s.counterexamples) {
        std::printf("              counterexample:\n");
        std::string line;
        for (char c : ce) {
            if (c == '\n') {
                std::printf("                %s\n", line.c_str());
                line.clear();
            } else {
                line.push_back(c);
            }
        }
        if (!line.empty()) std::printf("                %s\n", line.c_str());
    }
}

} // namespace

int main() {
    axg::VerifyOptions opt; // defaults: full scale, seed 1
    std::printf("== acceptance: full verification sweep ==\n");
    auto results = axg::run_verification(opt);
    bool all_pass = true;
    for (size_t i = 0; i < results.size(); ++i) {
        print_suite(int(i) + 1, results[i]);
        all_pass = all_pass && results[i].pass;
    }
    int code = axg::verification_exit_code(results);
    std::printf("sweep exit code: %d\n", code);

    std::printf("\n== acceptance: harness detects an injected fault ==\n");
    axg::VerifyOptions bug;
    bug.scale = 0.05;
    bug.inject_bug = true;
    auto bug_results = axg::run_verification(bug);
    bool fault_caught = false;
    for (const auto& s : bug_results) {
        if (s.name == "tree-recognizer") {
            fault_caught = !s.pass && s.disagreements >= 1 && !s.counterexamples.empty();
            std::printf("tree-recognizer under injected fault: %s (disagreements=%ld, "
                        "counterexamples=%zu)\n",
                        s.pass ? "PASS" : "FAIL", s.disagreements, s.counterexamples.size());
        }
    }
    std::printf("fault surfaced: %s\n", fault_caught ? "yes" : "NO");

    std::printf("\n== acceptance: empty corpus passes vacuously ==\n");
    axg::VerifyOptions empty;
    empty.scale = 0.0;
    auto empty_results = axg::run_verification(empty);
    bool vacuous_ok = true;
    for (const auto& s : empty_results) vacuous_ok = vacuous_ok && s.pass;
    std::printf("all suites vacuously pass: %s\n", vacuous_ok ? "yes" : "NO");

    bool ok = all_pass && code == 0 && fault_caught && vacuous_ok;
    std::printf("\nacceptance result: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
