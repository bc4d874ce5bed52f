#include "axg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace axg {

Graph Graph::build(int n, const EdgeList& edges) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return build(n, edges, std::move(labels));
}

Graph Graph::build(int n, const EdgeList& edges, std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (int(labels.size()) != n)
        throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                    " does not match order " + std::to_string(n));
    {
        std::vector<std::string> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw std::invalid_argument("duplicate vertex label '" + *dup + "'");
    }
    Graph g;
    g.adj_.assign(n, {});
    g.labels_ = std::move(labels);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ") with order " +
                                        std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += int(nb.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet Graph::closed_neighborhood(int v) const {
    VertexSet out = adj_[v];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(m_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::without(const VertexSet& drop) const {
    std::vector<char> dead(order(), 0);
    for (int v : drop) {
        if (v < 0 || v >= order())
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        dead[v] = 1;
    }
    VertexSet keep;
    for (int v = 0; v < order(); ++v)
        if (!dead[v]) keep.push_back(v);
    return induced(keep);
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<int> newid(order(), -1);
    VertexSet verts;
    for (int v : keep) {
        if (v < 0 || v >= order())
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        if (newid[v] < 0) {
            newid[v] = 0; // mark, number below in id order
            verts.push_back(v);
        }
    }
    std::sort(verts.begin(), verts.end());
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        newid[verts[i]] = int(i);
        labels.push_back(labels_[verts[i]]);
    }
    EdgeList es;
    for (int u : verts)
        for (int v : adj_[u])
            if (u < v && newid[v] >= 0) es.emplace_back(newid[u], newid[v]);
    return build(int(verts.size()), es, std::move(labels));
}

} // namespace axg
