#pragma once

#include "axg/graph.hpp"
#include "axg/matching.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace axg {

// Thrown when a search exceeds its node budget. Callers map this to a
// distinct exit status; nothing partial is returned.
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(std::uint64_t cap)
        : std::runtime_error("search budget of " + std::to_string(cap) +
                             " node expansions exhausted"),
          cap(cap) {}
    std::uint64_t cap;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchOptions {
    std::uint64_t node_budget = kDefaultNodeBudget; // per search invocation
};

struct IndSetResult {
    int size = 0;
    VertexSet set; // sorted
};

// Branch-and-bound searches. Deterministic: branching vertex is the
// lowest-id vertex of maximum candidate degree, include branch explored first.
IndSetResult max_independent_set(const Graph& g, const SearchOptions& opt = {});
IndSetResult max_independent_including(const Graph& g, int v, const SearchOptions& opt = {});
IndSetResult min_independent_dominating_set(const Graph& g, const SearchOptions& opt = {});

struct AnalysisReport {
    int alpha = 0;    // largest independent set
    int alpha_c = 0;  // min over v of largest independent set through v
    int ind_dom = -1; // smallest maximal independent set; -1 when skipped
    bool excellent = false;    // alpha_c == alpha
    bool well_covered = false; // ind_dom == alpha
    VertexSet alpha_set;
    std::vector<int> per_vertex_max;           // size n
    std::vector<VertexSet> per_vertex_witness; // witness through each vertex
    VertexSet critical;                        // v with alpha(g - v) < alpha; empty when skipped
    bool critical_computed = false;
};

struct AnalyzeOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    bool parallel = true;       // per-vertex searches across threads
    bool with_ind_dom = true;
    bool with_critical = true;
};

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opt = {});

// Exhaustive-enumeration reference: walks all 2^n vertex subsets. Same report
// as analyze (always includes ind_dom and critical). Throws
// std::invalid_argument above kEnumerationMaxOrder.
inline constexpr int kEnumerationMaxOrder = 20;
AnalysisReport enumerated_analyze(const Graph& g);

// Vertices contained in every maximum independent set.
VertexSet critical_vertices(const Graph& g, const SearchOptions& opt = {});

bool is_well_covered(const Graph& g, const SearchOptions& opt = {});

// Matching of each vertex of `ind` to a distinct neighbor outside `ind`.
// Throws std::invalid_argument when `ind` is not independent.
std::optional<Matching> match_into_complement(const Graph& g, const VertexSet& ind);

} // namespace axg
