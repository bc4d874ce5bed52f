#pragma once

#include "axg/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace axg {

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n); // n >= 3
Graph complete_graph(int n);
Graph star(int r);                // K_{1,r}: center 0, leaves 1..r
Graph double_star(int a, int b);  // centers 0,1 adjacent; a leaves on 0, b on 1

struct CoronaSpec {
    Graph base;
    std::vector<Graph> attachments; // one per base vertex, each of order >= 1
};

// Disjoint union of base and all attachments, plus edges joining each base
// vertex to every vertex of its attachment. Ids: base first, then attachments
// in base-vertex order. Attachment labels are "<base label>:<attachment label>".
Graph corona(const CoronaSpec& spec);
Graph corona(const Graph& base, const Graph& h); // same h at every vertex

// K_{clique_order} with a complete graph of the given order hung on each
// clique vertex. Body labels "b<i>", attachment labels "b<i>:a<j>".
Graph general_corona(int clique_order, const std::vector<int>& attachment_orders);

// Outer cycle v_0..v_{n-1} (ids 0..n-1), inner vertices u_0..u_{n-1}
// (ids n..2n-1); edges v_i v_{i+1}, v_i u_i, u_i u_{i+k} mod n.
// Requires n >= 3 and 1 <= k <= n/2. When k = n/2 the inner edges pair up.
Graph generalized_petersen(int n, int k);

struct CaterpillarWheelSpec {
    int cycle_length = 0;           // >= 3
    std::vector<int> leg_positions; // distinct values in [0, cycle_length)
};

// Cycle c_0..c_{len-1} (ids 0..len-1) plus one pendant leaf per leg position,
// leaf ids appended in position order.
Graph caterpillar_wheel(const CaterpillarWheelSpec& spec);

// Adds the path v - x - y with fresh vertices x, y (ids n, n+1).
Graph attach_k2(const Graph& g, int v);

// Replaces every edge with a length-2 path; subdividing vertices get ids
// n..n+m-1 in edges() order and labels "<u label>-<v label>".
Graph subdivision(const Graph& g);

// One gluing step: merge one edge of a fresh length-n cycle onto the existing
// edge (first, second). The fresh cycle's remaining n-2 vertices appear as a
// path first - x_1 - ... - x_{n-2} - second with fresh decimal labels.
struct Gluing {
    int first = 0, second = 0;
};

// Starts from C_n; applies each gluing in order. Every named edge must exist
// at its turn (edges created by earlier gluings are fair game).
Graph cycle_tree(int n, const std::vector<Gluing>& gluings);

// V(g) x V(h); (a,x) ~ (b,y) iff a = b and x ~ y, or x = y and a ~ b.
// (a,x) gets id a*|V(h)|+x and label "<a label>|<x label>".
Graph cartesian_product(const Graph& g, const Graph& h);

enum class RandomKind { tree, unicyclic, chordal, block, bipartite };
RandomKind parse_random_kind(const std::string& name);

// Deterministic for a fixed (kind, n, seed). Trees via Pruefer decode;
// unicyclic adds one non-edge to a tree; chordal inserts each vertex onto a
// clique among earlier vertices; block grows cliques on a random cut vertex;
// bipartite retries a random split + density until connected.
Graph random_family(RandomKind kind, int n, std::uint64_t seed);

// Erdos-Renyi-style: each pair independently with probability num/den.
Graph random_gnp(int n, int num, int den, std::uint64_t seed);

} // namespace axg
