#include "axg/independence.hpp"

#include "axg/bits.hpp"
#include "axg/structure.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace axg {

namespace {

struct MaskGraph {
    int n = 0;
    std::vector<Bits> open, closed;

    static MaskGraph of(const Graph& g) {
        MaskGraph mg;
        mg.n = g.order();
        mg.open.assign(mg.n, Bits(mg.n));
        mg.closed.assign(mg.n, Bits(mg.n));
        for (int v = 0; v < mg.n; ++v) {
            for (int w : g.neighbors(v)) mg.open[v].set(w);
            mg.closed[v] = mg.open[v];
            mg.closed[v].set(v);
        }
        return mg;
    }
};

// Maximum-independent-set search. Upper bound: greedy clique cover of the
// candidate set (each clique contributes at most one vertex).
struct MisSearch {
    const MaskGraph& mg;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best = -1;
    Bits best_set;

    MisSearch(const MaskGraph& mg, std::uint64_t budget) : mg(mg), budget(budget) {}

    void bump() {
        if (++nodes > budget) throw BudgetExhausted(budget);
    }

    int cover_bound(const Bits& cand) const {
        Bits left = cand;
        int cliques = 0;
        int v;
        while ((v = left.first()) >= 0) {
            // grow a clique greedily from v inside left
            Bits common = left & mg.open[v];
            left.reset(v);
            int w;
            while ((w = common.first()) >= 0) {
                left.reset(w);
                common &= mg.open[w];
            }
            ++cliques;
        }
        return cliques;
    }

    int pick(const Bits& cand) const {
        int best_v = -1, best_d = -1;
        cand.for_each([&](int v) {
            int d = mg.open[v].count_and(cand);
            if (d > best_d) {
                best_d = d;
                best_v = v;
            }
        });
        return best_v;
    }

    void greedy_seed(Bits cand, Bits chosen, int size) {
        // lowest candidate degree first
        while (cand.any()) {
            int pick_v = -1, pick_d = mg.n + 1;
            cand.for_each([&](int v) {
                int d = mg.open[v].count_and(cand);
                if (d < pick_d) {
                    pick_d = d;
                    pick_v = v;
                }
            });
            chosen.set(pick_v);
            ++size;
            cand.remove(mg.closed[pick_v]);
        }
        if (size > best) {
            best = size;
            best_set = chosen;
        }
    }

    void run(Bits cand, const Bits& chosen, int size) {
        bump();
        if (cand.none()) {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        if (size + cover_bound(cand) <= best) return;
        int v = pick(cand);
        Bits with = chosen;
        with.set(v);
        run(minus(cand, mg.closed[v]), with, size + 1);
        cand.reset(v);
        run(std::move(cand), chosen, size);
    }
};

// Minimum-maximal-independent-set search. Branches on the closed
// neighborhood of the first undominated vertex; every maximal independent set
// must intersect it.
struct DomSearch {
    const MaskGraph& mg;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best;
    Bits best_set;
    int max_closed_degree = 1;

    DomSearch(const MaskGraph& mg, std::uint64_t budget) : mg(mg), budget(budget) {
        best = mg.n + 1;
        for (int v = 0; v < mg.n; ++v)
            max_closed_degree = std::max(max_closed_degree, mg.closed[v].count());
    }

    void bump() {
        if (++nodes > budget) throw BudgetExhausted(budget);
    }

    // chosen independent; banned = closed neighborhoods of chosen;
    // excluded = vertices decided out (may still become dominated)
    void run(const Bits& chosen, const Bits& dominated, Bits excluded, int size) {
        bump();
        if (size >= best) return;
        Bits undom = Bits::full(mg.n);
        undom.remove(dominated);
        int u = undom.first();
        if (u < 0) {
            best = size;
            best_set = chosen;
            return;
        }
        int lower = size + (undom.count() + max_closed_degree - 1) / max_closed_degree;
        if (lower >= best) return;
        // candidates: closed neighbors of u, independent from chosen, not excluded
        Bits usable(mg.n);
        mg.closed[u].for_each([&](int w) {
            if (!excluded.test(w) && !mg.open[w].intersects(chosen)) usable.set(w);
        });
        if (usable.none()) return;
        usable.for_each([&](int w) {
            Bits c2 = chosen;
            c2.set(w);
            Bits d2 = dominated;
            d2 |= mg.closed[w];
            run(c2, d2, excluded, size + 1);
            excluded.set(w); // later branches must not reuse w
        });
    }
};

AnalysisReport analyze_impl(const Graph& g, const AnalyzeOptions& opt) {
    AnalysisReport rep;
    int n = g.order();
    rep.per_vertex_max.assign(n, 0);
    rep.per_vertex_witness.assign(n, {});
    if (n == 0) {
        rep.excellent = true;
        rep.well_covered = opt.with_ind_dom;
        rep.ind_dom = opt.with_ind_dom ? 0 : -1;
        rep.critical_computed = opt.with_critical;
        return rep;
    }
    MaskGraph mg = MaskGraph::of(g);
    SearchOptions so{opt.node_budget};

    {
        MisSearch s(mg, so.node_budget);
        s.greedy_seed(Bits::full(n), Bits(n), 0);
        s.run(Bits::full(n), Bits(n), 0);
        rep.alpha = s.best;
        rep.alpha_set = s.best_set.to_vector();
    }

    struct Slot {
        int size = 0;
        VertexSet set;
    };
    std::vector<Slot> through(n);
    bool exhausted = false;
    std::uint64_t exhausted_cap = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
    for (int v = 0; v < n; ++v) {
        try {
            MisSearch s(mg, so.node_budget);
            Bits chosen(n);
            chosen.set(v);
            Bits cand = Bits::full(n);
            cand.remove(mg.closed[v]);
            s.greedy_seed(cand, chosen, 1);
            s.run(cand, chosen, 1);
            through[v] = {s.best, s.best_set.to_vector()};
        } catch (const BudgetExhausted& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                exhausted = true;
                exhausted_cap = e.cap;
            }
        }
    }
    if (exhausted) throw BudgetExhausted(exhausted_cap);
    rep.alpha_c = rep.alpha;
    for (int v = 0; v < n; ++v) {
        rep.per_vertex_max[v] = through[v].size;
        rep.per_vertex_witness[v] = std::move(through[v].set);
        rep.alpha_c = std::min(rep.alpha_c, through[v].size);
    }
    rep.excellent = rep.alpha_c == rep.alpha;

    if (opt.with_ind_dom) {
        DomSearch s(mg, so.node_budget);
        s.run(Bits(n), Bits(n), Bits(n), 0);
        rep.ind_dom = s.best;
        rep.well_covered = rep.ind_dom == rep.alpha;
    }

    if (opt.with_critical) {
        std::vector<char> crit(n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
        for (int v = 0; v < n; ++v) {
            try {
                MisSearch s(mg, so.node_budget);
                Bits cand = Bits::full(n);
                cand.reset(v);
                s.greedy_seed(cand, Bits(n), 0);
                s.run(cand, Bits(n), 0);
                crit[v] = s.best < rep.alpha;
            } catch (const BudgetExhausted& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
                {
                    exhausted = true;
                    exhausted_cap = e.cap;
                }
            }
        }
        if (exhausted) throw BudgetExhausted(exhausted_cap);
        for (int v = 0; v < n; ++v)
            if (crit[v]) rep.critical.push_back(v);
        rep.critical_computed = true;
    }

    assert(rep.ind_dom < 0 || rep.ind_dom <= rep.alpha_c);
    assert(rep.alpha_c <= rep.alpha);
    return rep;
}

} // namespace

IndSetResult max_independent_set(const Graph& g, const SearchOptions& opt) {
    int n = g.order();
    if (n == 0) return {};
    MaskGraph mg = MaskGraph::of(g);
    MisSearch s(mg, opt.node_budget);
    s.greedy_seed(Bits::full(n), Bits(n), 0);
    s.run(Bits::full(n), Bits(n), 0);
    return {s.best, s.best_set.to_vector()};
}

IndSetResult max_independent_including(const Graph& g, int v, const SearchOptions& opt) {
    int n = g.order();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    MaskGraph mg = MaskGraph::of(g);
    MisSearch s(mg, opt.node_budget);
    Bits chosen(n);
    chosen.set(v);
    Bits cand = Bits::full(n);
    cand.remove(mg.closed[v]);
    s.greedy_seed(cand, chosen, 1);
    s.run(cand, chosen, 1);
    return {s.best, s.best_set.to_vector()};
}

IndSetResult min_independent_dominating_set(const Graph& g, const SearchOptions& opt) {
    int n = g.order();
    if (n == 0) return {};
    MaskGraph mg = MaskGraph::of(g);
    DomSearch s(mg, opt.node_budget);
    s.run(Bits(n), Bits(n), Bits(n), 0);
    return {s.best, s.best_set.to_vector()};
}

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opt) { return analyze_impl(g, opt); }

AnalysisReport enumerated_analyze(const Graph& g) {
    int n = g.order();
    if (n > kEnumerationMaxOrder)
        throw std::invalid_argument("enumeration limited to order " +
                                    std::to_string(kEnumerationMaxOrder));
    AnalysisReport rep;
    rep.per_vertex_max.assign(n, 0);
    rep.per_vertex_witness.assign(n, {});
    rep.critical_computed = true;
    if (n == 0) {
        rep.excellent = true;
        rep.well_covered = true;
        rep.ind_dom = 0;
        return rep;
    }
    std::vector<std::uint32_t> nbr(n, 0), cnbr(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) nbr[v] |= std::uint32_t(1) << w;
        cnbr[v] = nbr[v] | (std::uint32_t(1) << v);
    }
    const std::uint32_t full = n == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1;
    std::vector<std::uint32_t> best_mask(n, 0);
    std::vector<int> without(n, 0);
    int alpha = 0, ind_dom = n + 1;
    std::uint32_t alpha_mask = 0;
    for (std::uint32_t s = 0;; ++s) {
        bool independent = true;
        std::uint32_t dominated = 0;
        for (std::uint32_t t = s; t; t &= t - 1) {
            int v = std::countr_zero(t);
            if (nbr[v] & s) {
                independent = false;
                break;
            }
            dominated |= cnbr[v];
        }
        if (independent) {
            int sz = std::popcount(s);
            if (sz > alpha) {
                alpha = sz;
                alpha_mask = s;
            }
            for (int v = 0; v < n; ++v) {
                if (s >> v & 1) {
                    if (sz > rep.per_vertex_max[v]) {
                        rep.per_vertex_max[v] = sz;
                        best_mask[v] = s;
                    }
                } else if (sz > without[v]) {
                    without[v] = sz;
                }
            }
            if (dominated == full && sz < ind_dom) ind_dom = sz;
        }
        if (s == full) break;
    }
    rep.alpha = alpha;
    for (int w = 0; w < n; ++w)
        if (alpha_mask >> w & 1) rep.alpha_set.push_back(w);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (best_mask[v] >> w & 1) rep.per_vertex_witness[v].push_back(w);
    rep.alpha_c = alpha;
    for (int v = 0; v < n; ++v) rep.alpha_c = std::min(rep.alpha_c, rep.per_vertex_max[v]);
    rep.ind_dom = ind_dom;
    rep.excellent = rep.alpha_c == rep.alpha;
    rep.well_covered = rep.ind_dom == rep.alpha;
    for (int v = 0; v < n; ++v)
        if (without[v] < alpha) rep.critical.push_back(v);
    return rep;
}

VertexSet critical_vertices(const Graph& g, const SearchOptions& opt) {
    AnalyzeOptions ao;
    ao.node_budget = opt.node_budget;
    ao.with_ind_dom = false;
    ao.with_critical = true;
    return analyze(g, ao).critical;
}

bool is_well_covered(const Graph& g, const SearchOptions& opt) {
    if (g.order() == 0) return true;
    int alpha = max_independent_set(g, opt).size;
    return min_independent_dominating_set(g, opt).size == alpha;
}

std::optional<Matching> match_into_complement(const Graph& g, const VertexSet& ind) {
    for (size_t i = 0; i < ind.size(); ++i)
        for (size_t j = i + 1; j < ind.size(); ++j)
            if (g.adjacent(ind[i], ind[j]))
                throw std::invalid_argument("set is not independent: vertices " +
                                            std::to_string(ind[i]) + " and " +
                                            std::to_string(ind[j]) + " are adjacent");
    std::vector<char> inside(g.order(), 0);
    for (int v : ind) inside[v] = 1;
    std::vector<int> match(g.order(), -1);
    std::vector<char> visited(g.order());
    // augmenting path search alternating ind / complement
    std::function<bool(int)> augment = [&](int u) -> bool {
        for (int w : g.neighbors(u)) {
            if (inside[w] || visited[w]) continue;
            visited[w] = 1;
            if (match[w] < 0 || augment(match[w])) {
                match[w] = u;
                match[u] = w;
                return true;
            }
        }
        return false;
    };
    for (int u : ind) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(u)) return std::nullopt;
    }
    Matching m;
    for (int u : ind) m.edges.emplace_back(u, match[u]);
    return m;
}

} // namespace axg
