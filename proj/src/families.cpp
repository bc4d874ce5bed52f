#include "axg/families.hpp"

#include "axg/rng.hpp"
#include "axg/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace axg {

Graph empty_graph(int n) { return Graph::build(n, {}); }

Graph path_graph(int n) {
    EdgeList es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::build(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs order >= 3, got " + std::to_string(n));
    EdgeList es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::build(n, es);
}

Graph complete_graph(int n) {
    EdgeList es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::build(n, es);
}

Graph star(int r) {
    if (r < 0) throw std::invalid_argument("leaf count must be non-negative");
    EdgeList es;
    for (int i = 1; i <= r; ++i) es.emplace_back(0, i);
    return Graph::build(r + 1, es);
}

Graph double_star(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("leaf counts must be non-negative");
    EdgeList es{{0, 1}};
    int next = 2;
    for (int i = 0; i < a; ++i) es.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) es.emplace_back(1, next++);
    return Graph::build(next, es);
}

Graph corona(const CoronaSpec& spec) {
    int nb = spec.base.order();
    if (int(spec.attachments.size()) != nb)
        throw std::invalid_argument("need one attachment per base vertex: base order " +
                                    std::to_string(nb) + ", attachments " +
                                    std::to_string(spec.attachments.size()));
    for (const auto& h : spec.attachments)
        if (h.order() < 1) throw std::invalid_argument("attachments must be nonempty");
    int total = nb;
    for (const auto& h : spec.attachments) total += h.order();
    std::vector<std::string> labels;
    labels.reserve(total);
    for (int v = 0; v < nb; ++v) labels.push_back(spec.base.label(v));
    EdgeList es = spec.base.edges();
    int off = nb;
    for (int v = 0; v < nb; ++v) {
        const Graph& h = spec.attachments[v];
        for (int w = 0; w < h.order(); ++w) {
            labels.push_back(spec.base.label(v) + ":" + h.label(w));
            es.emplace_back(v, off + w);
        }
        for (auto [x, y] : h.edges()) es.emplace_back(off + x, off + y);
        off += h.order();
    }
    return Graph::build(total, es, std::move(labels));
}

Graph corona(const Graph& base, const Graph& h) {
    CoronaSpec spec;
    spec.base = base;
    spec.attachments.assign(base.order(), h);
    return corona(spec);
}

Graph general_corona(int clique_order, const std::vector<int>& attachment_orders) {
    if (clique_order < 1) throw std::invalid_argument("clique order must be >= 1");
    if (int(attachment_orders.size()) != clique_order)
        throw std::invalid_argument("need one attachment order per clique vertex");
    for (int k : attachment_orders)
        if (k < 1) throw std::invalid_argument("attachment orders must be >= 1");
    CoronaSpec spec;
    {
        Graph body = complete_graph(clique_order);
        std::vector<std::string> labels(clique_order);
        for (int i = 0; i < clique_order; ++i) labels[i] = "b" + std::to_string(i);
        spec.base = Graph::build(clique_order, body.edges(), std::move(labels));
    }
    for (int k : attachment_orders) {
        Graph h = complete_graph(k);
        std::vector<std::string> labels(k);
        for (int j = 0; j < k; ++j) labels[j] = "a" + std::to_string(j);
        spec.attachments.push_back(Graph::build(k, h.edges(), std::move(labels)));
    }
    return corona(spec);
}

Graph generalized_petersen(int n, int k) {
    if (n < 3) throw std::invalid_argument("petersen needs n >= 3, got " + std::to_string(n));
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("petersen needs 1 <= k <= n/2, got k = " + std::to_string(k));
    EdgeList es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);         // outer cycle
        es.emplace_back(i, n + i);               // spoke
        es.emplace_back(n + i, n + (i + k) % n); // inner skip edges
    }
    std::vector<std::string> labels(2 * n);
    for (int i = 0; i < n; ++i) {
        labels[i] = "v" + std::to_string(i);
        labels[n + i] = "u" + std::to_string(i);
    }
    return Graph::build(2 * n, es, std::move(labels));
}

Graph caterpillar_wheel(const CaterpillarWheelSpec& spec) {
    int len = spec.cycle_length;
    if (len < 3) throw std::invalid_argument("cycle length must be >= 3");
    std::set<int> seen;
    for (int p : spec.leg_positions) {
        if (p < 0 || p >= len)
            throw std::invalid_argument("leg position out of range: " + std::to_string(p));
        if (!seen.insert(p).second)
            throw std::invalid_argument("duplicate leg position: " + std::to_string(p));
    }
    EdgeList es;
    for (int i = 0; i < len; ++i) es.emplace_back(i, (i + 1) % len);
    int next = len;
    std::vector<int> pos(spec.leg_positions);
    std::sort(pos.begin(), pos.end());
    for (int p : pos) es.emplace_back(p, next++);
    return Graph::build(next, es);
}

Graph attach_k2(const Graph& g, int v) {
    int n = g.order();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    EdgeList es = g.edges();
    es.emplace_back(v, n);
    es.emplace_back(n, n + 1);
    std::vector<std::string> labels = g.labels();
    std::string x = g.label(v) + "+";
    while (std::find(labels.begin(), labels.end(), x) != labels.end()) x += "+";
    labels.push_back(x);
    std::string y = x + "'";
    while (std::find(labels.begin(), labels.end(), y) != labels.end()) y += "'";
    labels.push_back(y);
    return Graph::build(n + 2, es, std::move(labels));
}

Graph subdivision(const Graph& g) {
    int n = g.order();
    EdgeList orig = g.edges();
    EdgeList es;
    std::vector<std::string> labels = g.labels();
    int next = n;
    for (auto [u, v] : orig) {
        labels.push_back(g.label(u) + "-" + g.label(v));
        es.emplace_back(u, next);
        es.emplace_back(next, v);
        ++next;
    }
    return Graph::build(next, es, std::move(labels));
}

Graph cycle_tree(int n, const std::vector<Gluing>& gluings) {
    Graph g = cycle_graph(n);
    for (const auto& glue : gluings) {
        int u = glue.first, v = glue.second;
        if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.adjacent(u, v))
            throw std::invalid_argument("gluing names a missing edge: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        int base = g.order();
        EdgeList es = g.edges();
        std::vector<std::string> labels = g.labels();
        for (int i = 0; i < n - 2; ++i) labels.push_back(std::to_string(base + i));
        // path first - x_1 - ... - x_{n-2} - second closes the new cycle
        int prev = u;
        for (int i = 0; i < n - 2; ++i) {
            es.emplace_back(prev, base + i);
            prev = base + i;
        }
        es.emplace_back(prev, v);
        g = Graph::build(base + n - 2, es, std::move(labels));
    }
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int gn = g.order(), hn = h.order();
    EdgeList es;
    for (auto [a, b] : g.edges())
        for (int x = 0; x < hn; ++x) es.emplace_back(a * hn + x, b * hn + x);
    for (auto [x, y] : h.edges())
        for (int a = 0; a < gn; ++a) es.emplace_back(a * hn + x, a * hn + y);
    std::vector<std::string> labels(gn * hn);
    for (int a = 0; a < gn; ++a)
        for (int x = 0; x < hn; ++x) labels[a * hn + x] = g.label(a) + "|" + h.label(x);
    return Graph::build(gn * hn, es, std::move(labels));
}

RandomKind parse_random_kind(const std::string& name) {
    if (name == "tree") return RandomKind::tree;
    if (name == "unicyclic") return RandomKind::unicyclic;
    if (name == "chordal") return RandomKind::chordal;
    if (name == "block") return RandomKind::block;
    if (name == "bipartite") return RandomKind::bipartite;
    throw std::invalid_argument("unknown random kind '" + name + "'");
}

namespace {

Graph random_tree(int n, Rng& rng) {
    if (n == 1) return empty_graph(1);
    if (n == 2) return path_graph(2);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = rng.below(n);
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    EdgeList es;
    for (int x : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        es.emplace_back(leaf, x);
        if (--deg[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    es.emplace_back(a, b);
    return Graph::build(n, es);
}

Graph random_unicyclic(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("unicyclic needs n >= 3");
    Graph t = random_tree(n, rng);
    while (true) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v || t.adjacent(u, v)) continue;
        EdgeList es = t.edges();
        es.emplace_back(u, v);
        return Graph::build(n, es);
    }
}

Graph random_chordal(int n, Rng& rng) {
    EdgeList es;
    for (int v = 1; v < n; ++v) {
        // grow a clique among earlier vertices, then join v to all of it
        int u = rng.below(v);
        std::vector<int> members{u};
        while (rng.chance(1, 2)) {
            std::vector<int> cands;
            for (int w = 0; w < v; ++w) {
                if (std::find(members.begin(), members.end(), w) != members.end()) continue;
                bool all = true;
                for (int x : members) {
                    bool adj = false;
                    for (auto [a, b] : es)
                        if ((a == x && b == w) || (a == w && b == x)) adj = true;
                    if (!adj) {
                        all = false;
                        break;
                    }
                }
                if (all) cands.push_back(w);
            }
            if (cands.empty()) break;
            members.push_back(cands[rng.below(int(cands.size()))]);
        }
        for (int x : members) es.emplace_back(x, v);
    }
    return Graph::build(n, es);
}

Graph random_block(int n, Rng& rng) {
    if (n == 1) return empty_graph(1);
    EdgeList es;
    int built = 1;
    while (built < n) {
        int attach = rng.below(built);
        int extra = std::min(1 + rng.below(3), n - built); // block order 2..4
        std::vector<int> blockv{attach};
        for (int i = 0; i < extra; ++i) blockv.push_back(built + i);
        for (size_t i = 0; i < blockv.size(); ++i)
            for (size_t j = i + 1; j < blockv.size(); ++j)
                es.emplace_back(blockv[i], blockv[j]);
        built += extra;
    }
    return Graph::build(n, es);
}

Graph random_bipartite(int n, Rng& rng) {
    if (n == 1) return empty_graph(1);
    for (int attempt = 0;; ++attempt) {
        int a = 1 + rng.below(n - 1);
        int num = std::min<int>(95, 15 + 10 * rng.below(7) + 5 * attempt);
        EdgeList es;
        for (int i = 0; i < a; ++i)
            for (int j = a; j < n; ++j)
                if (rng.chance(num, 100)) es.emplace_back(i, j);
        Graph g = Graph::build(n, es);
        if (is_connected(g)) return g;
    }
}

} // namespace

Graph random_family(RandomKind kind, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    Rng rng(seed);
    switch (kind) {
    case RandomKind::tree: return random_tree(n, rng);
    case RandomKind::unicyclic: return random_unicyclic(n, rng);
    case RandomKind::chordal: return random_chordal(n, rng);
    case RandomKind::block: return random_block(n, rng);
    case RandomKind::bipartite: return random_bipartite(n, rng);
    }
    throw std::logic_error("unreachable");
}

Graph random_gnp(int n, int num, int den, std::uint64_t seed) {
    if (n < 0 || den <= 0 || num < 0) throw std::invalid_argument("bad gnp parameters");
    Rng rng(seed);
    EdgeList es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(std::uint64_t(num), std::uint64_t(den))) es.emplace_back(i, j);
    return Graph::build(n, es);
}

} // namespace axg
