#pragma once

#include "axg/graph.hpp"

#include <optional>
#include <vector>

namespace axg {

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g); // order 0 counts as connected
bool is_complete(const Graph& g);
bool is_tree(const Graph& g);      // connected, m = n-1
bool is_unicyclic(const Graph& g); // connected, m = n

struct Bipartition {
    VertexSet a, b;
};
// Two-coloring when one exists; a holds the side of the lowest vertex in each
// component.
std::optional<Bipartition> bipartition(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct BlockDecomposition {
    std::vector<VertexSet> blocks;            // maximal 2-connected pieces, bridges,
                                              // and isolated vertices as singletons
    VertexSet cut_vertices;                   // sorted
    std::vector<std::vector<int>> membership; // vertex -> indices into blocks
};
BlockDecomposition blocks(const Graph& g);

// Every block induces a complete graph.
bool is_block_graph(const Graph& g);

// v's closed neighborhood induces a clique.
bool is_simplicial_vertex(const Graph& g, int v);

struct SimplexSet {
    VertexSet simplicial_vertices;
    std::vector<VertexSet> simplexes; // distinct closed neighborhoods of the above
};
SimplexSet simplexes(const Graph& g);

// Every vertex lies in at least one simplex.
bool is_simplicial_graph(const Graph& g);

// Order in which each vertex is simplicial in the graph induced by it and the
// later vertices; nullopt when none exists.
std::optional<std::vector<int>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);

// Vertices with at least two degree-1 neighbors.
VertexSet strong_support_vertices(const Graph& g);

struct Classification {
    bool connected = false;
    bool tree = false;
    bool unicyclic = false;
    bool bipartite = false;
    bool chordal = false;
    bool block_graph = false;
    bool simplicial = false;
    bool complete = false;
    std::vector<VertexSet> component_list;
};
Classification classify(const Graph& g);

// The cycle of a connected unicyclic graph, in cyclic order starting at its
// lowest vertex, second element the lower of that vertex's two cycle
// neighbors. Nullopt when g is not connected unicyclic.
std::optional<VertexSet> unique_cycle(const Graph& g);

struct CaterpillarWheel {
    VertexSet cycle;                      // cyclic order
    std::vector<std::pair<int, int>> legs; // (support on cycle, pendant leaf)
};
// View of g as a cycle plus pendant leaves on cycle vertices; nullopt when g
// is not of that shape.
std::optional<CaterpillarWheel> as_caterpillar_wheel(const Graph& g);

// Cyclic distances between consecutive leg supports, walking the cycle once.
// Legs on the same cycle vertex contribute a 0 gap. Empty for < 2 legs.
std::vector<int> consecutive_leg_gaps(const CaterpillarWheel& cw);

// Backtracking isomorphism test with degree-profile pruning. Intended for
// small graphs (tests and sweeps), not a general-purpose solver.
bool isomorphic(const Graph& g, const Graph& h);

} // namespace axg
