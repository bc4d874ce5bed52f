#include "axg/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace axg {

std::vector<VertexSet> components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = int(out.size());
        out.push_back({});
        std::deque<int> q{s};
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            out[c].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push_back(w);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_complete(const Graph& g) {
    long long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_unicyclic(const Graph& g) { return g.size() == g.order() && is_connected(g); }

std::optional<Bipartition> bipartition(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    Bipartition bp;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) (color[v] == 0 ? bp.a : bp.b).push_back(v);
    return bp;
}

std::optional<int> girth(const Graph& g) {
    int n = g.order();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[r] = 0;
        std::deque<int> q{r};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (w != parent[v] && v != parent[w]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

void add_block(BlockDecomposition& bd, VertexSet verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    int idx = int(bd.blocks.size());
    for (int v : verts) bd.membership[v].push_back(idx);
    bd.blocks.push_back(std::move(verts));
}

} // namespace

BlockDecomposition blocks(const Graph& g) {
    int n = g.order();
    BlockDecomposition bd;
    bd.membership.assign(n, {});
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), it(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            add_block(bd, {root});
            continue;
        }
        int root_children = 0;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            if (it[v] < g.degree(v)) {
                int w = g.neighbors(v)[it[v]++];
                if (disc[w] < 0) {
                    estack.emplace_back(v, w);
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back();
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        if (u != root) cut[u] = 1;
                        VertexSet verts;
                        while (true) {
                            auto [a, b] = estack.back();
                            estack.pop_back();
                            verts.push_back(a);
                            verts.push_back(b);
                            if (a == u && b == v) break;
                        }
                        add_block(bd, std::move(verts));
                    }
                }
            }
        }
        if (root_children >= 2) cut[root] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (cut[v]) bd.cut_vertices.push_back(v);
    return bd;
}

bool is_block_graph(const Graph& g) {
    for (const auto& b : blocks(g).blocks)
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                if (!g.adjacent(b[i], b[j])) return false;
    return true;
}

bool is_simplicial_vertex(const Graph& g, int v) {
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) return false;
    return true;
}

SimplexSet simplexes(const Graph& g) {
    SimplexSet out;
    std::set<VertexSet> seen;
    for (int v = 0; v < g.order(); ++v) {
        if (!is_simplicial_vertex(g, v)) continue;
        out.simplicial_vertices.push_back(v);
        VertexSet s = g.closed_neighborhood(v);
        if (seen.insert(s).second) out.simplexes.push_back(std::move(s));
    }
    return out;
}

bool is_simplicial_graph(const Graph& g) {
    std::vector<char> covered(g.order(), 0);
    for (const auto& s : simplexes(g).simplexes)
        for (int v : s) covered[v] = 1;
    for (char c : covered)
        if (!c) return false;
    return true;
}

std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    int n = g.order();
    std::vector<char> alive(n, 1);
    std::vector<int> order;
    order.reserve(n);
    for (int round = 0; round < n; ++round) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            VertexSet nb;
            for (int w : g.neighbors(v))
                if (alive[w]) nb.push_back(w);
            bool ok = true;
            for (size_t i = 0; i < nb.size() && ok; ++i)
                for (size_t j = i + 1; j < nb.size() && ok; ++j)
                    if (!g.adjacent(nb[i], nb[j])) ok = false;
            if (ok) pick = v;
        }
        if (pick < 0) return std::nullopt;
        order.push_back(pick);
        alive[pick] = 0;
    }
    return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

VertexSet strong_support_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        int leaves = 0;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 1) ++leaves;
        if (leaves >= 2) out.push_back(v);
    }
    return out;
}

Classification classify(const Graph& g) {
    Classification c;
    c.component_list = components(g);
    c.connected = c.component_list.size() <= 1;
    c.tree = is_tree(g);
    c.unicyclic = is_unicyclic(g);
    c.bipartite = bipartition(g).has_value();
    c.chordal = is_chordal(g);
    c.block_graph = is_block_graph(g);
    c.simplicial = is_simplicial_graph(g);
    c.complete = is_complete(g);
    return c;
}

std::optional<VertexSet> unique_cycle(const Graph& g) {
    if (!is_unicyclic(g)) return std::nullopt;
    int n = g.order();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::deque<int> q;
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) q.push_back(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        alive[v] = 0;
        for (int w : g.neighbors(v))
            if (alive[w] && --deg[w] == 1) q.push_back(w);
    }
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (alive[v]) start = v;
    VertexSet cyc{start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (alive[w] && w != prev && (next < 0 || w < next)) next = w;
        prev = cur;
        cur = next;
        if (cur != start) cyc.push_back(cur);
    } while (cur != start);
    return cyc;
}

std::optional<CaterpillarWheel> as_caterpillar_wheel(const Graph& g) {
    auto uc = unique_cycle(g);
    if (!uc) return std::nullopt;
    std::vector<char> on_cycle(g.order(), 0);
    for (int v : *uc) on_cycle[v] = 1;
    CaterpillarWheel cw;
    cw.cycle = *uc;
    for (int v = 0; v < g.order(); ++v) {
        if (on_cycle[v]) continue;
        if (g.degree(v) != 1) return std::nullopt;
        int s = g.neighbors(v)[0];
        if (!on_cycle[s]) return std::nullopt;
        cw.legs.emplace_back(s, v);
    }
    std::sort(cw.legs.begin(), cw.legs.end());
    return cw;
}

std::vector<int> consecutive_leg_gaps(const CaterpillarWheel& cw) {
    if (cw.legs.size() < 2) return {};
    std::vector<int> pos_of(cw.cycle.empty() ? 0 : 1 + *std::max_element(cw.cycle.begin(), cw.cycle.end()), -1);
    for (size_t i = 0; i < cw.cycle.size(); ++i) pos_of[cw.cycle[i]] = int(i);
    std::vector<int> pos;
    for (auto [s, l] : cw.legs) {
        (void)l;
        pos.push_back(pos_of[s]);
    }
    std::sort(pos.begin(), pos.end());
    std::vector<int> gaps;
    for (size_t i = 0; i + 1 < pos.size(); ++i) gaps.push_back(pos[i + 1] - pos[i]);
    gaps.push_back(int(cw.cycle.size()) - pos.back() + pos.front());
    return gaps;
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h,
                        const std::vector<int>& order, size_t at,
                        std::vector<int>& image, std::vector<char>& used) {
    if (at == order.size()) return true;
    int v = order[at];
    for (int w = 0; w < h.order(); ++w) {
        if (used[w] || h.degree(w) != g.degree(v)) continue;
        bool ok = true;
        for (int u : g.neighbors(v)) {
            if (image[u] >= 0 && !h.adjacent(w, image[u])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            // Mapped non-neighbors must stay non-adjacent.
            for (int u = 0; ok && u < g.order(); ++u)
                if (image[u] >= 0 && !g.adjacent(v, u) && h.adjacent(w, image[u])) ok = false;
        }
        if (!ok) continue;
        image[v] = w;
        used[w] = 1;
        if (extend_isomorphism(g, h, order, at + 1, image, used)) return true;
        image[v] = -1;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    auto degrees = [](const Graph& x) {
        std::vector<int> d(x.order());
        for (int v = 0; v < x.order(); ++v) d[v] = x.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h)) return false;
    // Map high-degree vertices first; keep the mapped part connected when
    // possible so adjacency constraints bite early.
    std::vector<int> order;
    std::vector<char> placed(g.order(), 0);
    while (int(order.size()) < g.order()) {
        int best = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (placed[v]) continue;
            bool touches = false;
            for (int u : g.neighbors(v))
                if (placed[u]) {
                    touches = true;
                    break;
                }
            if (best < 0) {
                best = v;
            } else {
                bool best_touches = false;
                for (int u : g.neighbors(best))
                    if (placed[u]) {
                        best_touches = true;
                        break;
                    }
                if (touches != best_touches) {
                    if (touches) best = v;
                } else if (g.degree(v) > g.degree(best)) {
                    best = v;
                }
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<int> image(g.order(), -1);
    std::vector<char> used(h.order(), 0);
    return extend_isomorphism(g, h, order, 0, image, used);
}

} // namespace axg
