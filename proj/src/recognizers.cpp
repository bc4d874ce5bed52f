#include "axg/recognizers.hpp"

#include "axg/bits.hpp"
#include "axg/rng.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace axg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::optional<QuickReject> quick_reject(const Graph& g) {
    VertexSet strong = strong_support_vertices(g);
    if (!strong.empty()) return QuickReject{"strong-support-vertex", std::move(strong)};
    SimplexSet sx = simplexes(g);
    std::vector<int> count(g.order(), 0);
    for (const auto& s : sx.simplexes)
        for (int v : s) ++count[v];
    for (int v = 0; v < g.order(); ++v)
        if (count[v] >= 2) return QuickReject{"overlapping-simplexes", {v}};
    return std::nullopt;
}

namespace {

PluckTrace pluck_impl(const Graph& g, Rng* rng) {
    int n = g.order();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    PluckTrace tr;
    while (remaining >= 4) {
        VertexSet eligible;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || deg[v] != 2) continue;
            for (int w : g.neighbors(v))
                if (alive[w] && deg[w] == 1) {
                    eligible.push_back(v);
                    break;
                }
        }
        if (eligible.empty()) break;
        int s = rng ? eligible[rng->below(int(eligible.size()))] : eligible.front();
        int leaf = -1;
        for (int w : g.neighbors(s))
            if (alive[w] && deg[w] == 1) {
                leaf = w;
                break;
            }
        tr.steps.push_back({s, leaf});
        for (int x : {s, leaf}) {
            alive[x] = 0;
            for (int w : g.neighbors(x))
                if (alive[w]) --deg[w];
        }
        remaining -= 2;
    }
    for (int v = 0; v < n; ++v)
        if (alive[v]) tr.residual_vertices.push_back(v);
    tr.residual = g.induced(tr.residual_vertices);
    return tr;
}

} // namespace

PluckTrace pluck(const Graph& g) { return pluck_impl(g, nullptr); }

PluckTrace pluck_with_order(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    return pluck_impl(g, &rng);
}

Verdict tree_excellent(const Graph& g) {
    if (g.order() < 2 || !is_tree(g))
        throw std::invalid_argument("tree recognizer needs a tree of order >= 2");
    Verdict v;
    v.method = method::tree;
    auto pm = perfect_matching_sparse(g);
    if (pm) {
        v.excellent = true;
        v.alpha = g.order() / 2;
        v.certificate = *pm;
    } else {
        v.certificate = NoCertificate{"no perfect matching", {}};
    }
    return v;
}

Verdict bipartite_excellent(const Graph& g, const Bipartition& bp) {
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("bipartite recognizer needs a connected graph of order >= 2");
    std::vector<int> side(g.order(), -1);
    for (int v : bp.a) side[v] = 0;
    for (int v : bp.b) {
        if (side[v] == 0) throw std::invalid_argument("bipartition sides overlap");
        side[v] = 1;
    }
    for (int v = 0; v < g.order(); ++v)
        if (side[v] < 0) throw std::invalid_argument("bipartition misses a vertex");
    for (auto [u, w] : g.edges())
        if (side[u] == side[w]) throw std::invalid_argument("graph is not bipartite for the given sides");
    Verdict v;
    v.method = method::bipartite;
    Matching m = maximum_bipartite_matching(g, bp);
    if (2 * int(m.edges.size()) == g.order()) {
        v.excellent = true;
        v.alpha = g.order() / 2;
        v.certificate = std::move(m);
    } else {
        v.certificate = NoCertificate{"no perfect matching", {}};
    }
    return v;
}

Verdict caterpillar_wheel_excellent(const Graph& g) {
    auto cw = as_caterpillar_wheel(g);
    if (!cw) throw std::invalid_argument("not a caterpillar-wheel");
    Verdict v;
    v.method = method::caterpillar_wheel;
    if (cw->legs.empty()) {
        v.excellent = true;
        v.alpha = int(cw->cycle.size()) / 2;
        v.certificate = CycleCertificate{cw->cycle};
        return v;
    }
    if (cw->legs.size() < 2) {
        v.certificate = NoCertificate{"single leg", {cw->legs[0].first}};
        return v;
    }
    auto pm = perfect_matching_sparse(g);
    if (pm) {
        v.excellent = true;
        // With a perfect matching alpha is at most n/2, and taking every leaf
        // plus half of each stretch of cycle vertices between supports
        // attains it.
        v.alpha = g.order() / 2;
        v.certificate = *pm;
    } else {
        v.certificate = NoCertificate{"no perfect matching", {}};
    }
    return v;
}

Verdict unicyclic_excellent(const Graph& g) {
    if (!is_unicyclic(g)) throw std::invalid_argument("not a connected unicyclic graph");
    PluckTrace tr = pluck(g);
    Verdict v;
    v.method = method::unicyclic;
    auto cw = as_caterpillar_wheel(tr.residual);
    if (!cw) {
        v.certificate = NoCertificate{"plucked graph is not a caterpillar-wheel", tr.residual_vertices};
        return v;
    }
    auto to_orig = [&](int local) { return tr.residual_vertices[local]; };
    UnicyclicCertificate cert;
    cert.steps = tr.steps;
    cert.residual_vertices = tr.residual_vertices;
    // Each removed support-leaf pair lowers alpha by exactly one (deleting a
    // pendant length-2 path does), so alpha follows from the residual's.
    const int plucked = int(tr.steps.size());
    if (cw->legs.empty()) {
        VertexSet cyc;
        for (int c : cw->cycle) cyc.push_back(to_orig(c));
        cert.residual_cycle = std::move(cyc);
        v.excellent = true;
        v.alpha = plucked + int(cw->cycle.size()) / 2;
        v.certificate = std::move(cert);
        return v;
    }
    if (cw->legs.size() < 2) {
        v.certificate =
            NoCertificate{"plucked graph has a single leg", {to_orig(cw->legs[0].first)}};
        return v;
    }
    auto pm = perfect_matching_sparse(tr.residual);
    if (!pm) {
        v.certificate = NoCertificate{"plucked graph has no perfect matching", {}};
        return v;
    }
    Matching mapped;
    for (auto [a, b] : pm->edges) mapped.edges.emplace_back(to_orig(a), to_orig(b));
    cert.residual_matching = std::move(mapped);
    v.excellent = true;
    v.alpha = plucked + tr.residual.order() / 2;
    v.certificate = std::move(cert);
    return v;
}

Verdict simplicial_excellent(const Graph& g) {
    if (!is_simplicial_graph(g)) throw std::invalid_argument("not a simplicial graph");
    SimplexSet sx = simplexes(g);
    std::vector<int> count(g.order(), 0);
    for (const auto& s : sx.simplexes)
        for (int v : s) ++count[v];
    Verdict v;
    v.method = method::simplicial;
    for (int u = 0; u < g.order(); ++u) {
        if (count[u] >= 2) {
            v.certificate = NoCertificate{"vertex in two simplexes", {u}};
            return v;
        }
    }
    v.excellent = true;
    v.alpha = int(sx.simplexes.size());
    v.certificate = SimplexPartition{sx.simplexes};
    return v;
}

CliqueCoverBuild build_successive_clique_cover(const Graph& g) {
    int n = g.order();
    std::vector<char> alive(n, 1);
    int remaining = n;
    CliqueCoverBuild out;
    while (remaining > 0) {
        int pick = -1;
        VertexSet part;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[v]) continue;
            VertexSet nb;
            for (int w : g.neighbors(v))
                if (alive[w]) nb.push_back(w);
            bool ok = true;
            for (size_t i = 0; i < nb.size() && ok; ++i)
                for (size_t j = i + 1; j < nb.size() && ok; ++j)
                    if (!g.adjacent(nb[i], nb[j])) ok = false;
            if (ok) {
                pick = v;
                part = std::move(nb);
                part.insert(std::lower_bound(part.begin(), part.end(), v), v);
            }
        }
        if (pick < 0) {
            for (int v = 0; v < n; ++v)
                if (alive[v]) out.leftover.push_back(v);
            return out;
        }
        for (int x : part) alive[x] = 0;
        remaining -= int(part.size());
        out.cover.parts.push_back(std::move(part));
    }
    out.complete = true;
    return out;
}

bool verify_successive_clique_cover(const Graph& g, const SuccessiveCliqueCover& c) {
    int n = g.order();
    std::vector<int> owner(n, -1);
    int total = 0;
    for (size_t i = 0; i < c.parts.size(); ++i) {
        for (int v : c.parts[i]) {
            if (v < 0 || v >= n || owner[v] >= 0)
                throw std::invalid_argument("parts do not partition the vertex set");
            owner[v] = int(i);
            ++total;
        }
    }
    if (total != n) throw std::invalid_argument("parts do not partition the vertex set");

    // each part must be a simplex of the graph induced by it and later parts
    std::vector<char> alive(n, 1);
    for (size_t i = 0; i < c.parts.size(); ++i) {
        const VertexSet& part = c.parts[i];
        bool found = false;
        for (int v : part) {
            VertexSet closed{v};
            for (int w : g.neighbors(v))
                if (alive[w]) closed.push_back(w);
            std::sort(closed.begin(), closed.end());
            if (closed != part) continue;
            bool clique = true;
            for (size_t a = 0; a < closed.size() && clique; ++a)
                for (size_t b = a + 1; b < closed.size() && clique; ++b)
                    if (closed[a] != v && closed[b] != v && !g.adjacent(closed[a], closed[b]))
                        clique = false;
            if (clique) {
                found = true;
                break;
            }
        }
        if (!found) return false;
        for (int v : part) alive[v] = 0;
    }

    // every vertex extends to an independent transversal of the later parts
    std::function<bool(size_t, VertexSet&)> extend = [&](size_t j, VertexSet& chosen) -> bool {
        if (j == c.parts.size()) return true;
        for (int w : c.parts[j]) {
            bool ok = true;
            for (int x : chosen)
                if (g.adjacent(w, x)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(w);
            if (extend(j + 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (size_t i = 0; i < c.parts.size(); ++i) {
        for (int u : c.parts[i]) {
            VertexSet chosen{u};
            if (!extend(i + 1, chosen)) return false;
        }
    }
    return true;
}

Verdict chordal_excellent(const Graph& g) {
    CliqueCoverBuild b = build_successive_clique_cover(g);
    if (!b.complete) throw std::invalid_argument("not a chordal graph");
    Verdict v;
    v.method = method::chordal;
    if (verify_successive_clique_cover(g, b.cover)) {
        v.excellent = true;
        v.alpha = int(b.cover.parts.size());
        v.certificate = std::move(b.cover);
    } else {
        v.certificate = NoCertificate{"clique-cover transversal condition fails", {}};
    }
    return v;
}

namespace {

struct BlockCoverSearch {
    const BlockDecomposition& bd;
    int n;
    int stuck_vertex = -1;

    std::optional<std::vector<int>> solve(std::vector<char> covered, std::vector<char> alive,
                                          std::vector<int> chosen) {
        while (true) {
            int uncovered = -1, best_count = -1;
            int forced_block = -1;
            bool all_covered = true;
            for (int v = 0; v < n && best_count != 0; ++v) {
                if (covered[v]) continue;
                all_covered = false;
                int cnt = 0, last = -1;
                for (int b : bd.membership[v])
                    if (alive[b]) {
                        ++cnt;
                        last = b;
                    }
                if (best_count < 0 || cnt < best_count) {
                    best_count = cnt;
                    uncovered = v;
                    forced_block = cnt == 1 ? last : -1;
                }
            }
            if (all_covered) {
                std::sort(chosen.begin(), chosen.end());
                return chosen;
            }
            if (best_count == 0) {
                if (stuck_vertex < 0) stuck_vertex = uncovered;
                return std::nullopt;
            }
            if (forced_block >= 0) {
                apply(covered, alive, chosen, forced_block);
                continue;
            }
            for (int b : bd.membership[uncovered]) {
                if (!alive[b]) continue;
                auto cov2 = covered;
                auto al2 = alive;
                auto ch2 = chosen;
                apply(cov2, al2, ch2, b);
                if (auto r = solve(std::move(cov2), std::move(al2), std::move(ch2))) return r;
                alive[b] = 0;
            }
            if (stuck_vertex < 0) stuck_vertex = uncovered;
            return std::nullopt;
        }
    }

    void apply(std::vector<char>& covered, std::vector<char>& alive, std::vector<int>& chosen,
               int b) const {
        chosen.push_back(b);
        for (int w : bd.blocks[b]) {
            covered[w] = 1;
            for (int j : bd.membership[w]) alive[j] = 0;
        }
    }
};

} // namespace

Verdict block_excellent(const Graph& g) {
    if (g.order() < 2 || !is_connected(g) || !is_block_graph(g))
        throw std::invalid_argument("block recognizer needs a connected block graph of order >= 2");
    BlockDecomposition bd = blocks(g);
    BlockCoverSearch search{bd, g.order()};
    auto cover = search.solve(std::vector<char>(g.order(), 0),
                              std::vector<char>(bd.blocks.size(), 1), {});
    Verdict v;
    v.method = method::block;
    if (cover) {
        v.excellent = true;
        v.alpha = int(cover->size());
        v.certificate = PerfectBlockCover{*cover};
    } else {
        VertexSet ev;
        if (search.stuck_vertex >= 0) ev.push_back(search.stuck_vertex);
        v.certificate = NoCertificate{"no perfect block-cover", std::move(ev)};
    }
    return v;
}

std::vector<std::vector<int>> all_perfect_block_covers(const Graph& g) {
    BlockDecomposition bd = blocks(g);
    int nb = int(bd.blocks.size());
    if (nb > 20) throw std::invalid_argument("too many blocks for exhaustive cover search");
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << nb); ++mask) {
        std::vector<int> hits(g.order(), 0);
        std::vector<int> idx;
        for (int b = 0; b < nb; ++b)
            if (mask >> b & 1) {
                idx.push_back(b);
                for (int v : bd.blocks[b]) ++hits[v];
            }
        bool ok = true;
        for (int v = 0; v < g.order(); ++v)
            if (hits[v] != 1) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(idx));
    }
    return out;
}

Verdict corona_excellent(const CoronaSpec& spec) {
    Graph g = corona(spec); // rejects mismatched attachment counts up front
    int nb = spec.base.order();
    Verdict v;
    v.method = method::corona;
    int off = nb;
    for (int b = 0; b < nb; ++b) {
        const Graph& h = spec.attachments[b];
        if (!is_complete(h)) {
            for (int x = 0; x < h.order(); ++x)
                for (int y = x + 1; y < h.order(); ++y)
                    if (!h.adjacent(x, y)) {
                        v.certificate = NoCertificate{"attachment is not complete at base vertex " +
                                                          spec.base.label(b),
                                                      {off + x, off + y}};
                        return v;
                    }
        }
        off += h.order();
    }
    v.excellent = true;
    v.alpha = nb;
    SimplexPartition part;
    off = nb;
    for (int b = 0; b < nb; ++b) {
        VertexSet s{b};
        for (int x = 0; x < spec.attachments[b].order(); ++x) s.push_back(off + x);
        off += spec.attachments[b].order();
        part.simplexes.push_back(std::move(s));
    }
    v.certificate = std::move(part);
    return v;
}

Verdict petersen_excellent(int n, int k, const SearchOptions& opt) {
    Graph g = generalized_petersen(n, k);
    IndSetResult base = max_independent_set(g, opt);
    IndependentSetFamily fam;
    fam.set_size = base.size;
    Bits covered(2 * n);
    for (int l = 0; l < n; ++l) {
        VertexSet rot;
        for (int v : base.set)
            rot.push_back(v < n ? (v + l) % n : n + (v - n + l) % n);
        std::sort(rot.begin(), rot.end());
        for (size_t i = 0; i < rot.size(); ++i)
            for (size_t j = i + 1; j < rot.size(); ++j)
                if (g.adjacent(rot[i], rot[j]))
                    throw std::runtime_error("rotation certificate failed: rotation " +
                                             std::to_string(l) + " is not independent");
        for (int v : rot) covered.set(v);
        fam.sets.push_back(std::move(rot));
    }
    if (covered != Bits::full(2 * n))
        throw std::runtime_error("rotation certificate failed: rotations do not cover the graph");
    Verdict v;
    v.excellent = true;
    v.method = method::petersen;
    v.alpha = base.size;
    v.certificate = std::move(fam);
    return v;
}

namespace {

Verdict recognize_connected(const Graph& g, const RecognizeOptions& opt) {
    int n = g.order();
    Verdict v;
    if (n <= 2) {
        v.method = method::base_case;
        v.excellent = true;
        v.alpha = 1;
        if (n == 1) {
            v.certificate = IndependentSetFamily{1, {{0}}};
        } else {
            Matching m;
            m.edges = {{0, 1}};
            v.certificate = std::move(m);
        }
        return v;
    }
    if (auto qr = quick_reject(g)) {
        v.method = method::quick_reject;
        v.certificate = *qr;
        return v;
    }
    if (is_tree(g)) return tree_excellent(g);
    if (is_unicyclic(g)) return unicyclic_excellent(g);
    if (auto bp = bipartition(g)) return bipartite_excellent(g, *bp);
    if (is_block_graph(g)) return block_excellent(g);
    if (is_simplicial_graph(g)) return simplicial_excellent(g);
    if (is_chordal(g)) return chordal_excellent(g);

    AnalyzeOptions ao;
    ao.node_budget = opt.node_budget;
    ao.parallel = opt.parallel;
    ao.with_ind_dom = false;
    ao.with_critical = false;
    AnalysisReport rep = analyze(g, ao);
    v.method = method::oracle;
    v.fallback_used = true;
    v.excellent = rep.excellent;
    v.alpha = rep.alpha;
    if (rep.excellent) {
        IndependentSetFamily fam;
        fam.set_size = rep.alpha;
        fam.sets = rep.per_vertex_witness;
        v.certificate = std::move(fam);
    } else {
        VertexSet ev;
        for (int u = 0; u < n; ++u)
            if (rep.per_vertex_max[u] < rep.alpha) ev.push_back(u);
        v.certificate = NoCertificate{"vertices in no maximum independent set", std::move(ev)};
    }
    return v;
}

} // namespace

Verdict recognize(const Graph& g, const RecognizeOptions& opt) {
    if (g.order() == 0) {
        Verdict v;
        v.method = method::base_case;
        v.excellent = true;
        v.alpha = 0;
        return v;
    }
    auto comps = components(g);
    if (comps.size() == 1) return recognize_connected(g, opt);
    Verdict v;
    v.method = method::components;
    v.excellent = true;
    int alpha_sum = 0;
    bool alpha_known = true;
    for (const auto& c : comps) {
        Verdict cv = recognize_connected(g.induced(c), opt);
        v.excellent = v.excellent && cv.excellent;
        v.fallback_used = v.fallback_used || cv.fallback_used;
        if (cv.alpha)
            alpha_sum += *cv.alpha;
        else
            alpha_known = false;
        v.component_vertices.push_back(c);
        v.component_verdicts.push_back(std::move(cv));
    }
    if (alpha_known) v.alpha = alpha_sum;
    return v;
}

namespace {

bool is_exactly_cycle(const Graph& g, const VertexSet& cycle) {
    int n = g.order();
    if (int(cycle.size()) != n || n < 3 || g.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i)
        if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool validate_components(const Graph& g, const Verdict& vd) {
    if (vd.component_vertices.size() != vd.component_verdicts.size()) return false;
    auto comps = components(g);
    if (comps != vd.component_vertices) return false;
    bool all = true;
    for (size_t i = 0; i < comps.size(); ++i) {
        const Verdict& cv = vd.component_verdicts[i];
        if (!validate_certificate(g.induced(comps[i]), cv)) return false;
        all = all && cv.excellent;
    }
    return all == vd.excellent;
}

} // namespace

bool validate_certificate(const Graph& g, const Verdict& vd) {
    return std::visit(
        overloaded{
            [&](const std::monostate&) -> bool {
                if (vd.method == method::components) return validate_components(g, vd);
                return true;
            },
            [&](const QuickReject& qr) -> bool {
                if (vd.excellent) return false;
                if (qr.reason == "strong-support-vertex") {
                    if (qr.evidence.empty()) return false;
                    for (int v : qr.evidence) {
                        if (v < 0 || v >= g.order()) return false;
                        int leaves = 0;
                        for (int w : g.neighbors(v))
                            if (g.degree(w) == 1) ++leaves;
                        if (leaves < 2) return false;
                    }
                    return true;
                }
                if (qr.reason == "overlapping-simplexes") {
                    if (qr.evidence.size() != 1) return false;
                    int v = qr.evidence[0];
                    if (v < 0 || v >= g.order()) return false;
                    int count = 0;
                    for (const auto& s : simplexes(g).simplexes)
                        if (std::binary_search(s.begin(), s.end(), v)) ++count;
                    return count >= 2;
                }
                return false;
            },
            [&](const Matching& m) -> bool { return vd.excellent && m.perfect(g); },
            [&](const CycleCertificate& c) -> bool {
                return vd.excellent && is_exactly_cycle(g, c.cycle);
            },
            [&](const UnicyclicCertificate& c) -> bool {
                if (!vd.excellent) return false;
                if (c.residual_cycle.has_value() == c.residual_matching.has_value()) return false;
                int n = g.order();
                std::vector<char> alive(n, 1);
                std::vector<int> deg(n);
                for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
                int remaining = n;
                for (const auto& st : c.steps) {
                    if (remaining < 4) return false;
                    int s = st.support, l = st.leaf;
                    if (s < 0 || s >= n || l < 0 || l >= n || !alive[s] || !alive[l]) return false;
                    if (deg[s] != 2 || deg[l] != 1 || !g.adjacent(s, l)) return false;
                    for (int x : {s, l}) {
                        alive[x] = 0;
                        for (int w : g.neighbors(x))
                            if (alive[w]) --deg[w];
                    }
                    remaining -= 2;
                }
                VertexSet rest;
                for (int v = 0; v < n; ++v)
                    if (alive[v]) rest.push_back(v);
                if (rest != c.residual_vertices) return false;
                if (c.residual_cycle) {
                    const VertexSet& cyc = *c.residual_cycle;
                    VertexSet sorted = cyc;
                    std::sort(sorted.begin(), sorted.end());
                    if (sorted != rest || cyc.size() < 3) return false;
                    for (size_t i = 0; i < cyc.size(); ++i)
                        if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
                    for (int v : rest)
                        if (deg[v] != 2) return false;
                    return true;
                }
                const Matching& m = *c.residual_matching;
                std::vector<char> hit(n, 0);
                for (auto [a, b] : m.edges) {
                    if (a < 0 || a >= n || b < 0 || b >= n) return false;
                    if (!alive[a] || !alive[b] || !g.adjacent(a, b)) return false;
                    if (hit[a] || hit[b]) return false;
                    hit[a] = hit[b] = 1;
                }
                for (int v : rest)
                    if (!hit[v]) return false;
                return true;
            },
            [&](const SuccessiveCliqueCover& c) -> bool {
                if (!vd.excellent) return false;
                try {
                    return verify_successive_clique_cover(g, c);
                } catch (const std::invalid_argument&) {
                    return false;
                }
            },
            [&](const PerfectBlockCover& c) -> bool {
                if (!vd.excellent) return false;
                BlockDecomposition bd = blocks(g);
                std::vector<int> hits(g.order(), 0);
                std::vector<char> used(bd.blocks.size(), 0);
                for (int b : c.block_indices) {
                    if (b < 0 || b >= int(bd.blocks.size()) || used[b]) return false;
                    used[b] = 1;
                    for (int v : bd.blocks[b]) ++hits[v];
                }
                for (int v = 0; v < g.order(); ++v)
                    if (hits[v] != 1) return false;
                return true;
            },
            [&](const SimplexPartition& p) -> bool {
                if (!vd.excellent) return false;
                std::vector<int> owner(g.order(), -1);
                for (size_t i = 0; i < p.simplexes.size(); ++i)
                    for (int v : p.simplexes[i]) {
                        if (v < 0 || v >= g.order() || owner[v] >= 0) return false;
                        owner[v] = int(i);
                    }
                for (int v = 0; v < g.order(); ++v)
                    if (owner[v] < 0) return false;
                for (const auto& s : p.simplexes) {
                    bool witnessed = false;
                    for (int v : s) {
                        if (!is_simplicial_vertex(g, v)) continue;
                        VertexSet closed = g.closed_neighborhood(v);
                        if (closed == s) {
                            witnessed = true;
                            break;
                        }
                    }
                    if (!witnessed) return false;
                }
                return true;
            },
            [&](const IndependentSetFamily& f) -> bool {
                if (!vd.excellent || f.sets.empty()) return false;
                std::vector<char> covered(g.order(), 0);
                for (const auto& s : f.sets) {
                    if (int(s.size()) != f.set_size) return false;
                    for (size_t i = 0; i < s.size(); ++i) {
                        if (s[i] < 0 || s[i] >= g.order()) return false;
                        covered[s[i]] = 1;
                        for (size_t j = i + 1; j < s.size(); ++j)
                            if (g.adjacent(s[i], s[j])) return false;
                    }
                }
                for (int v = 0; v < g.order(); ++v)
                    if (!covered[v]) return false;
                return true;
            },
            [&](const NoCertificate&) -> bool { return !vd.excellent; },
        },
        vd.certificate);
}

} // namespace axg
