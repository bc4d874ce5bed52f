#pragma once

#include "axg/graph.hpp"
#include "axg/families.hpp"
#include "axg/independence.hpp"
#include "axg/matching.hpp"
#include "axg/structure.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace axg {

// Pinned method strings for Verdict::method.
namespace method {
inline constexpr const char* components = "components";
inline constexpr const char* base_case = "base-case";
inline constexpr const char* quick_reject = "quick-reject";
inline constexpr const char* tree = "tree/perfect-matching";
inline constexpr const char* bipartite = "bipartite/perfect-matching";
inline constexpr const char* caterpillar_wheel = "caterpillar-wheel/matching";
inline constexpr const char* unicyclic = "unicyclic/pluck";
inline constexpr const char* simplicial = "simplicial/simplex-partition";
inline constexpr const char* chordal = "chordal/successive-clique-cover";
inline constexpr const char* block = "block/perfect-block-cover";
inline constexpr const char* corona = "corona/complete-attachments";
inline constexpr const char* petersen = "petersen/rotations";
inline constexpr const char* oracle = "oracle-fallback";
} // namespace method

// A failed necessary condition. reason is one of "strong-support-vertex"
// (evidence: the vertices with two or more leaf neighbors) or
// "overlapping-simplexes" (evidence: a vertex in two simplexes).
struct QuickReject {
    std::string reason;
    VertexSet evidence;
};

struct PluckStep {
    int support = -1;
    int leaf = -1;
};

// Record of repeatedly removing a degree-2 support vertex together with its
// degree-1 neighbor, only while the current order is at least 4. All ids are
// in g's numbering; residual is the induced subgraph on what remains.
struct PluckTrace {
    std::vector<PluckStep> steps;
    VertexSet residual_vertices;
    Graph residual;
};

PluckTrace pluck(const Graph& g);
// Same fixed point policy, but each step removes a uniformly chosen eligible
// support instead of the lowest one.
PluckTrace pluck_with_order(const Graph& g, std::uint64_t seed);

// Ordered partition V_1..V_t: each part is the closed neighborhood of a
// vertex simplicial in the graph induced by that part and the later ones.
struct SuccessiveCliqueCover {
    std::vector<VertexSet> parts;
};

struct CliqueCoverBuild {
    SuccessiveCliqueCover cover;
    bool complete = false; // false: greedy stalled, leftover holds the rest
    VertexSet leftover;
};

// Greedy: pick the lowest-id simplicial vertex of the current graph, emit its
// closed neighborhood, delete it, repeat. Stalls exactly on non-chordal
// inputs (a full run is a perfect elimination order).
CliqueCoverBuild build_successive_clique_cover(const Graph& g);

// True iff parts is a successive clique-cover of g AND every vertex of every
// part extends to an independent transversal of the later parts (checked by
// depth-first backtracking). Throws std::invalid_argument when parts is not a
// partition of V(g).
bool verify_successive_clique_cover(const Graph& g, const SuccessiveCliqueCover& c);

// Indices into blocks(g).blocks; chosen blocks partition V(g).
struct PerfectBlockCover {
    std::vector<int> block_indices;
};

struct SimplexPartition {
    std::vector<VertexSet> simplexes;
};

// Equal-size independent sets whose union covers V(g); proves every vertex
// lies in an independent set of that size.
struct IndependentSetFamily {
    int set_size = 0;
    std::vector<VertexSet> sets;
};

struct CycleCertificate {
    VertexSet cycle; // cyclic order
};

// Pluck steps followed by what the residual turned out to be: a cycle, or a
// caterpillar-wheel with the given perfect matching. All ids original.
struct UnicyclicCertificate {
    std::vector<PluckStep> steps;
    VertexSet residual_vertices;
    std::optional<VertexSet> residual_cycle;
    std::optional<Matching> residual_matching;
};

// Negative verdicts carry the reason; evidence when a specific vertex set
// demonstrates it.
struct NoCertificate {
    std::string note;
    VertexSet evidence;
};

using Certificate =
    std::variant<std::monostate, QuickReject, Matching, CycleCertificate, UnicyclicCertificate,
                 SuccessiveCliqueCover, PerfectBlockCover, SimplexPartition, IndependentSetFamily,
                 NoCertificate>;

struct Verdict {
    bool excellent = false;
    std::string method;
    bool fallback_used = false;
    std::optional<int> alpha; // when the characterization yields it
    Certificate certificate;
    // populated when method == "components"
    std::vector<VertexSet> component_vertices;
    std::vector<Verdict> component_verdicts;
};

std::optional<QuickReject> quick_reject(const Graph& g);

// Class recognizers. Preconditions are the class membership stated on each;
// violations throw std::invalid_argument.
Verdict bipartite_excellent(const Graph& g, const Bipartition& bp); // connected, order >= 2
Verdict tree_excellent(const Graph& g);                             // tree, order >= 2
Verdict caterpillar_wheel_excellent(const Graph& g);
Verdict unicyclic_excellent(const Graph& g); // connected, m = n
Verdict simplicial_excellent(const Graph& g);
Verdict chordal_excellent(const Graph& g);
Verdict block_excellent(const Graph& g); // connected block graph, order >= 2
Verdict corona_excellent(const CoronaSpec& spec);
// Always excellent; certificate: an alpha-set and its n rotations, verified
// to be independent and to cover the graph. Throws std::runtime_error if that
// verification ever fails.
Verdict petersen_excellent(int n, int k, const SearchOptions& opt = {});

struct RecognizeOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    bool parallel = true; // oracle fallback may parallelize per-vertex work
};

// Dispatcher: per component, quick_reject, then the most specific
// characterization (tree, unicyclic, bipartite, block, simplicial, chordal),
// else the oracle with fallback_used = true. Whole graph excellent iff every
// component is.
Verdict recognize(const Graph& g, const RecognizeOptions& opt = {});

// Checks that the certificate proves what the verdict claims, independently
// of how it was produced. Negative verdicts and monostate certificates return
// true (nothing to validate). IndependentSetFamily certificates are validated
// structurally (independence, equal size, coverage).
bool validate_certificate(const Graph& g, const Verdict& v);

// Exhaustive search over all subsets of blocks(g).blocks; returns every
// subset that partitions V(g). Intended for small graphs (tests).
std::vector<std::vector<int>> all_perfect_block_covers(const Graph& g);

} // namespace axg
