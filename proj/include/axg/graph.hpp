#pragma once

#include <string>
#include <utility>
#include <vector>

namespace axg {

using VertexSet = std::vector<int>;                // sorted ascending unless noted
using EdgeList = std::vector<std::pair<int, int>>; // undirected

// Immutable simple undirected graph. Vertices are 0..n-1; each vertex carries
// a label (decimal id by default) that survives vertex deletion.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range endpoints or self loops.
    // Duplicate edges collapse silently. Labels default to "0".."n-1"; when
    // given, labels.size() must equal n.
    static Graph build(int n, const EdgeList& edges);
    static Graph build(int n, const EdgeList& edges, std::vector<std::string> labels);

    int order() const { return int(adj_.size()); }
    int size() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    VertexSet closed_neighborhood(int v) const;
    EdgeList edges() const; // (u, v) with u < v, lexicographic

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // New graph without the given vertices; remaining vertices are renumbered
    // contiguously in id order, labels carried over.
    Graph without(const VertexSet& drop) const;
    // New graph induced on `keep` (need not be sorted; duplicates ignored).
    Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int m_ = 0;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
    std::vector<std::string> labels_;
};

} // namespace axg
