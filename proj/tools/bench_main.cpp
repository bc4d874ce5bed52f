// Benchmarks the thread-parallel analysis against the serial path and the
// branch-and-bound solver against the exhaustive-enumeration reference.
// Results are checked for equality while timing, so a speed win that changes
// answers shows up immediately.

#include "axg/families.hpp"
#include "axg/independence.hpp"
#include "axg/rng.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

bool same_report(const axg::AnalysisReport& a, const axg::AnalysisReport& b) {
    return a.alpha == b.alpha && a.alpha_c == b.alpha_c && a.ind_dom == b.ind_dom &&
           a.excellent == b.excellent && a.critical == b.critical;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Timing: parallel vs serial analysis, search vs enumeration"};
    std::uint64_t seed = 1;
    int rounds = 3;
    app.add_option("--seed", seed, "corpus seed")->capture_default_str();
    app.add_option("--rounds", rounds, "timed repetitions per corpus")->capture_default_str();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

#ifdef _OPENMP
    std::cout << "threads available: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without thread support; parallel timings equal serial\n";
#endif

    // Corpus 1: the spokes-and-steps sweep plus dense random graphs, analyzed
    // with the per-vertex searches on one thread and on all threads.
    std::vector<axg::Graph> corpus;
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; 2 * k <= n; ++k) corpus.push_back(axg::generalized_petersen(n, k));
    for (int i = 0; i < 12; ++i)
        corpus.push_back(axg::random_gnp(18, 35, 100, axg::Rng::mix(seed, std::uint64_t(i))));

    double serial_total = 0.0, parallel_total = 0.0;
    bool all_equal = true;
    for (int r = 0; r < rounds; ++r) {
        for (const axg::Graph& g : corpus) {
            axg::AnalyzeOptions so;
            so.parallel = false;
            auto t0 = Clock::now();
            auto rs = axg::analyze(g, so);
            auto t1 = Clock::now();
            axg::AnalyzeOptions po;
            po.parallel = true;
            auto rp = axg::analyze(g, po);
            auto t2 = Clock::now();
            serial_total += secs(t0, t1);
            parallel_total += secs(t1, t2);
            if (!same_report(rs, rp)) {
                all_equal = false;
                std::cerr << "MISMATCH between serial and parallel analysis on a corpus graph\n";
            }
        }
    }
    std::cout << "analysis corpus: " << corpus.size() << " graphs x " << rounds << " rounds\n";
    std::cout << "  serial   " << serial_total << " s\n";
    std::cout << "  parallel " << parallel_total << " s";
    if (parallel_total > 0) std::cout << "  (speedup x" << serial_total / parallel_total << ")";
    std::cout << "\n";

    // Corpus 2: search vs full enumeration on graphs small enough to walk
    // every vertex subset.
    std::vector<axg::Graph> small;
    for (int i = 0; i < 40; ++i) {
        axg::Rng rng(axg::Rng::mix(seed, 1000 + std::uint64_t(i)));
        int n = 12 + rng.below(5); // 12..16
        small.push_back(axg::random_gnp(n, 20 + 5 * rng.below(10), 100, rng.next()));
    }
    double search_total = 0.0, enum_total = 0.0;
    for (int r = 0; r < rounds; ++r) {
        for (const axg::Graph& g : small) {
            auto t0 = Clock::now();
            auto rs = axg::analyze(g);
            auto t1 = Clock::now();
            auto re = axg::enumerated_analyze(g);
            auto t2 = Clock::now();
            search_total += secs(t0, t1);
            enum_total += secs(t1, t2);
            if (!same_report(rs, re)) {
                all_equal = false;
                std::cerr << "MISMATCH between search and enumeration on a corpus graph\n";
            }
        }
    }
    std::cout << "reference corpus: " << small.size() << " graphs x " << rounds << " rounds\n";
    std::cout << "  branch-and-bound " << search_total << " s\n";
    std::cout << "  enumeration      " << enum_total << " s\n";

    if (!all_equal) {
        std::cout << "RESULT: mismatches detected\n";
        return 1;
    }
    std::cout << "RESULT: all timed paths agree\n";
    return 0;
}
