#include "axg/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace axg {

bool Matching::valid(const Graph& g) const {
    std::vector<char> used(g.order(), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) return false;
        if (!g.adjacent(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

bool Matching::perfect(const Graph& g) const {
    return valid(g) && 2 * int(edges.size()) == g.order();
}

namespace {

bool augment(const Graph& g, int u, std::vector<int>& match, std::vector<char>& visited) {
    for (int w : g.neighbors(u)) {
        if (visited[w]) continue;
        visited[w] = 1;
        if (match[w] < 0 || augment(g, match[w], match, visited)) {
            match[w] = u;
            match[u] = w;
            return true;
        }
    }
    return false;
}

} // namespace

Matching maximum_bipartite_matching(const Graph& g, const Bipartition& bp) {
    std::vector<int> match(g.order(), -1);
    std::vector<char> visited(g.order());
    for (int u : bp.a) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(g, u, match, visited);
    }
    Matching m;
    for (int u : bp.a)
        if (match[u] >= 0) m.edges.emplace_back(u, match[u]);
    return m;
}

std::optional<Matching> perfect_matching_sparse(const Graph& g) {
    int n = g.order();
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 0) return std::nullopt;
        if (deg[v] == 1) leaves.insert(v);
    }
    Matching m;
    auto remove = [&](int v) {
        alive[v] = 0;
        leaves.erase(v);
        for (int w : g.neighbors(v))
            if (alive[w]) {
                if (--deg[w] == 1) leaves.insert(w);
                if (deg[w] == 0) leaves.erase(w);
            }
    };
    int remaining = n;
    while (!leaves.empty()) {
        int u = *leaves.begin();
        leaves.erase(leaves.begin());
        if (!alive[u]) continue;
        if (deg[u] == 0) return std::nullopt; // isolated while unmatched
        int v = -1;
        for (int w : g.neighbors(u))
            if (alive[w]) {
                v = w;
                break;
            }
        m.edges.emplace_back(std::min(u, v), std::max(u, v));
        remove(u);
        remove(v);
        remaining -= 2;
        for (int w = 0; w < n; ++w)
            if (alive[w] && deg[w] == 0) return std::nullopt;
    }
    if (remaining == 0) return m;
    // Leftovers must be disjoint cycles; match alternate edges, even length only.
    std::vector<char> done(n, 0);
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || done[s]) continue;
        if (deg[s] != 2) throw std::logic_error("component with more than one cycle");
        VertexSet cyc{s};
        done[s] = 1;
        int prev = -1, cur = s;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (alive[w] && w != prev && !done[w]) {
                    next = w;
                    break;
                }
            if (next < 0) break;
            if (deg[next] != 2) throw std::logic_error("component with more than one cycle");
            done[next] = 1;
            cyc.push_back(next);
            prev = cur;
            cur = next;
        }
        if (cyc.size() % 2 != 0) return std::nullopt;
        for (size_t i = 0; i + 1 < cyc.size(); i += 2) m.edges.emplace_back(cyc[i], cyc[i + 1]);
    }
    return m;
}

} // namespace axg
