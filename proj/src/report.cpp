#include "axg/report.hpp"

#include <stdexcept>
#include <unordered_map>

namespace axg {

namespace {

std::unordered_map<std::string, int> label_map(const Graph& g) {
    std::unordered_map<std::string, int> m;
    for (int v = 0; v < g.order(); ++v)
        if (!m.emplace(g.label(v), v).second)
            throw std::invalid_argument("duplicate label '" + g.label(v) +
                                        "'; label round-trip needs unique labels");
    return m;
}

Json edge_labels(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    Json out = Json::array();
    for (auto [u, v] : edges) out.push_back(Json::array({g.label(u), g.label(v)}));
    return out;
}

std::vector<std::pair<int, int>> edges_from(const Graph& g, const Json& j) {
    std::unordered_map<std::string, int> m = label_map(g);
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        int u = m.at(e.at(0).get<std::string>());
        int v = m.at(e.at(1).get<std::string>());
        out.emplace_back(u, v);
    }
    return out;
}

} // namespace

std::vector<std::string> labels_of(const Graph& g, const VertexSet& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(g.label(v));
    return out;
}

VertexSet ids_of(const Graph& g, const std::vector<std::string>& labels) {
    auto m = label_map(g);
    VertexSet out;
    out.reserve(labels.size());
    for (const auto& s : labels) {
        auto it = m.find(s);
        if (it == m.end()) throw std::invalid_argument("unknown label '" + s + "'");
        out.push_back(it->second);
    }
    return out;
}

Json graph_json(const Graph& g) {
    return Json{{"order", g.order()},
                {"size", g.size()},
                {"labels", g.labels()},
                {"edges", edge_labels(g, g.edges())}};
}

Json classification_json(const Classification& c) {
    return Json{{"connected", c.connected},   {"tree", c.tree},
                {"unicyclic", c.unicyclic},   {"bipartite", c.bipartite},
                {"chordal", c.chordal},       {"block_graph", c.block_graph},
                {"simplicial", c.simplicial}, {"complete", c.complete},
                {"components", c.component_list.size()}};
}

Json analysis_json(const Graph& g, const AnalysisReport& r) {
    Json per_vertex = Json::array();
    for (int v = 0; v < g.order(); ++v)
        per_vertex.push_back(Json{{"vertex", g.label(v)},
                                  {"max_independent_size", r.per_vertex_max[v]},
                                  {"witness", labels_of(g, r.per_vertex_witness[v])}});
    Json out{{"alpha", r.alpha},
             {"alpha_c", r.alpha_c},
             {"excellent", r.excellent},
             {"alpha_set", labels_of(g, r.alpha_set)},
             {"per_vertex", per_vertex}};
    if (r.ind_dom >= 0) {
        out["i"] = r.ind_dom;
        out["well_covered"] = r.well_covered;
    } else {
        out["i"] = nullptr;
    }
    if (r.critical_computed) out["critical"] = labels_of(g, r.critical);
    return out;
}

Json certificate_json(const Graph& g, const Certificate& c) {
    return std::visit(
        [&](const auto& cert) -> Json {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return Json{{"kind", "none"}};
            } else if constexpr (std::is_same_v<T, QuickReject>) {
                return Json{{"kind", "quick-reject"},
                            {"reason", cert.reason},
                            {"evidence", labels_of(g, cert.evidence)}};
            } else if constexpr (std::is_same_v<T, Matching>) {
                return Json{{"kind", "matching"}, {"edges", edge_labels(g, cert.edges)}};
            } else if constexpr (std::is_same_v<T, CycleCertificate>) {
                return Json{{"kind", "cycle"}, {"cycle", labels_of(g, cert.cycle)}};
            } else if constexpr (std::is_same_v<T, UnicyclicCertificate>) {
                Json steps = Json::array();
                for (const auto& st : cert.steps)
                    steps.push_back(Json::array({g.label(st.support), g.label(st.leaf)}));
                Json out{{"kind", "pluck"},
                         {"steps", steps},
                         {"residual", labels_of(g, cert.residual_vertices)}};
                if (cert.residual_cycle)
                    out["residual_cycle"] = labels_of(g, *cert.residual_cycle);
                if (cert.residual_matching)
                    out["residual_matching"] = edge_labels(g, cert.residual_matching->edges);
                return out;
            } else if constexpr (std::is_same_v<T, SuccessiveCliqueCover>) {
                Json parts = Json::array();
                for (const auto& p : cert.parts) parts.push_back(labels_of(g, p));
                return Json{{"kind", "clique-cover"}, {"parts", parts}};
            } else if constexpr (std::is_same_v<T, PerfectBlockCover>) {
                BlockDecomposition bd = blocks(g);
                Json sets = Json::array();
                for (int b : cert.block_indices) sets.push_back(labels_of(g, bd.blocks[b]));
                return Json{{"kind", "block-cover"},
                            {"blocks", cert.block_indices},
                            {"vertex_sets", sets}};
            } else if constexpr (std::is_same_v<T, SimplexPartition>) {
                Json parts = Json::array();
                for (const auto& p : cert.simplexes) parts.push_back(labels_of(g, p));
                return Json{{"kind", "simplex-partition"}, {"simplexes", parts}};
            } else if constexpr (std::is_same_v<T, IndependentSetFamily>) {
                Json sets = Json::array();
                for (const auto& s : cert.sets) sets.push_back(labels_of(g, s));
                return Json{{"kind", "independent-set-family"},
                            {"set_size", cert.set_size},
                            {"sets", sets}};
            } else {
                static_assert(std::is_same_v<T, NoCertificate>);
                return Json{{"kind", "no-certificate"},
                            {"note", cert.note},
                            {"evidence", labels_of(g, cert.evidence)}};
            }
        },
        c);
}

Json verdict_json(const Graph& g, const Verdict& v) {
    Json out{{"excellent", v.excellent},
             {"method", v.method},
             {"fallback_used", v.fallback_used},
             {"certificate", certificate_json(g, v.certificate)}};
    if (v.alpha) out["alpha"] = *v.alpha;
    if (!v.component_verdicts.empty()) {
        Json comps = Json::array();
        for (size_t i = 0; i < v.component_verdicts.size(); ++i) {
            Graph sub = g.induced(v.component_vertices[i]);
            comps.push_back(Json{{"vertices", labels_of(g, v.component_vertices[i])},
                                 {"verdict", verdict_json(sub, v.component_verdicts[i])}});
        }
        out["components"] = comps;
    }
    return out;
}

Certificate certificate_from_json(const Graph& g, const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "none") return std::monostate{};
    if (kind == "quick-reject")
        return QuickReject{j.at("reason").get<std::string>(),
                           ids_of(g, j.at("evidence").get<std::vector<std::string>>())};
    if (kind == "matching") {
        Matching m;
        m.edges = edges_from(g, j.at("edges"));
        return m;
    }
    if (kind == "cycle")
        return CycleCertificate{ids_of(g, j.at("cycle").get<std::vector<std::string>>())};
    if (kind == "pluck") {
        UnicyclicCertificate c;
        for (const auto& st : j.at("steps")) {
            VertexSet pair = ids_of(g, {st.at(0).get<std::string>(), st.at(1).get<std::string>()});
            c.steps.push_back({pair[0], pair[1]});
        }
        c.residual_vertices = ids_of(g, j.at("residual").get<std::vector<std::string>>());
        if (j.contains("residual_cycle"))
            c.residual_cycle = ids_of(g, j.at("residual_cycle").get<std::vector<std::string>>());
        if (j.contains("residual_matching")) {
            Matching m;
            m.edges = edges_from(g, j.at("residual_matching"));
            c.residual_matching = std::move(m);
        }
        return c;
    }
    if (kind == "clique-cover") {
        SuccessiveCliqueCover c;
        for (const auto& p : j.at("parts"))
            c.parts.push_back(ids_of(g, p.get<std::vector<std::string>>()));
        return c;
    }
    if (kind == "block-cover")
        return PerfectBlockCover{j.at("blocks").get<std::vector<int>>()};
    if (kind == "simplex-partition") {
        SimplexPartition c;
        for (const auto& p : j.at("simplexes"))
            c.simplexes.push_back(ids_of(g, p.get<std::vector<std::string>>()));
        return c;
    }
    if (kind == "independent-set-family") {
        IndependentSetFamily c;
        c.set_size = j.at("set_size").get<int>();
        for (const auto& s : j.at("sets"))
            c.sets.push_back(ids_of(g, s.get<std::vector<std::string>>()));
        return c;
    }
    if (kind == "no-certificate")
        return NoCertificate{j.at("note").get<std::string>(),
                             ids_of(g, j.at("evidence").get<std::vector<std::string>>())};
    throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

Verdict verdict_from_json(const Graph& g, const Json& j) {
    Verdict v;
    v.excellent = j.at("excellent").get<bool>();
    v.method = j.at("method").get<std::string>();
    v.fallback_used = j.at("fallback_used").get<bool>();
    if (j.contains("alpha") && !j.at("alpha").is_null()) v.alpha = j.at("alpha").get<int>();
    v.certificate = certificate_from_json(g, j.at("certificate"));
    if (j.contains("components")) {
        for (const auto& comp : j.at("components")) {
            VertexSet vs = ids_of(g, comp.at("vertices").get<std::vector<std::string>>());
            Graph sub = g.induced(vs);
            v.component_verdicts.push_back(verdict_from_json(sub, comp.at("verdict")));
            v.component_vertices.push_back(std::move(vs));
        }
    }
    return v;
}

} // namespace axg
