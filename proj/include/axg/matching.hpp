#pragma once

#include "axg/graph.hpp"
#include "axg/structure.hpp"

#include <optional>

namespace axg {

struct Matching {
    std::vector<std::pair<int, int>> edges;

    // Edges exist in g and share no endpoint.
    bool valid(const Graph& g) const;
    // valid and every vertex of g is covered
    bool perfect(const Graph& g) const;
};

// Maximum matching of a bipartite graph via augmenting paths. `bp` must be a
// proper two-coloring of g.
Matching maximum_bipartite_matching(const Graph& g, const Bipartition& bp);

// Perfect matching of a graph each of whose components contains at most one
// cycle (forests, unicyclic components). Nullopt when none exists. Throws
// std::logic_error outside that class.
std::optional<Matching> perfect_matching_sparse(const Graph& g);

} // namespace axg
