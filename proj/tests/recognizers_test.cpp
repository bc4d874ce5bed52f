#include "axg/recognizers.hpp"

#include "axg/families.hpp"
#include "axg/independence.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <variant>

using namespace axg;
using axg_test::bowtie;
using axg_test::make;
using axg_test::two_triangle_bridge;

namespace {

Graph k33() {
    return make(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// Diamond 0..3 with a length-2 tail 3-4-5. Chordal, but not a tree, cycle,
// bipartite, block, or simplicial graph: its two simplexes {0,1,2} and {4,5}
// are disjoint yet miss vertex 3, so the dispatcher reaches the clique-cover
// recognizer.
Graph diamond_tail() {
    return make(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
}

// Triangle 0-1-2 with a length-3 path hung on vertex 0.
Graph spider() {
    return make(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}});
}

// C_4 on 0..3 with a length-2 tail 0-4-5.
Graph square_tail() {
    return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}});
}

// Triangle 0-1-2 with length-2 tails on vertices 0 and 1.
Graph two_tail_triangle() {
    return make(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 5}, {5, 6}});
}

} // namespace

TEST_CASE("quick rejection") {
    auto qr = quick_reject(star(2));
    REQUIRE(qr.has_value());
    CHECK(qr->reason == "strong-support-vertex");
    CHECK(qr->evidence == VertexSet{0});

    qr = quick_reject(bowtie());
    REQUIRE(qr.has_value());
    CHECK(qr->reason == "overlapping-simplexes");
    CHECK(qr->evidence == VertexSet{0});

    CHECK_FALSE(quick_reject(cycle_graph(4)).has_value());
    CHECK_FALSE(quick_reject(path_graph(6)).has_value());
}

TEST_CASE("trees") {
    Verdict v = tree_excellent(path_graph(6));
    CHECK(v.excellent);
    CHECK(v.method == method::tree);
    CHECK(v.alpha == 3);
    CHECK(std::get<Matching>(v.certificate).perfect(path_graph(6)));
    CHECK(validate_certificate(path_graph(6), v));

    CHECK(tree_excellent(path_graph(4)).excellent);
    Verdict odd = tree_excellent(path_graph(3));
    CHECK_FALSE(odd.excellent);
    CHECK_FALSE(odd.alpha.has_value());
    CHECK(std::get<NoCertificate>(odd.certificate).note == "no perfect matching");
    CHECK_FALSE(tree_excellent(star(3)).excellent);

    CHECK_THROWS_AS(tree_excellent(cycle_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(tree_excellent(complete_graph(1)), std::invalid_argument);
}

TEST_CASE("bipartite graphs") {
    Graph c6 = cycle_graph(6);
    auto bp = bipartition(c6);
    REQUIRE(bp.has_value());
    Verdict v = bipartite_excellent(c6, *bp);
    CHECK(v.excellent);
    CHECK(v.alpha == 3);
    CHECK(validate_certificate(c6, v));

    Graph k = k33();
    Verdict w = bipartite_excellent(k, *bipartition(k));
    CHECK(w.excellent);
    CHECK(w.alpha == 3);
    CHECK(std::get<Matching>(w.certificate).perfect(k));

    Graph p5 = path_graph(5);
    CHECK_FALSE(bipartite_excellent(p5, *bipartition(p5)).excellent);

    Bipartition overlap{{0, 1, 2}, {0, 3, 4, 5}};
    CHECK_THROWS_AS(bipartite_excellent(c6, overlap), std::invalid_argument);
    Bipartition missing{{0, 2, 4}, {1, 3}};
    CHECK_THROWS_AS(bipartite_excellent(c6, missing), std::invalid_argument);
    Bipartition wrong{{0, 1, 4}, {2, 3, 5}};
    CHECK_THROWS_AS(bipartite_excellent(c6, wrong), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_excellent(make(2, {}), Bipartition{{0}, {1}}),
                    std::invalid_argument);
}

TEST_CASE("caterpillar wheels and bare cycles") {
    Verdict bare = caterpillar_wheel_excellent(cycle_graph(5));
    CHECK(bare.excellent);
    CHECK(bare.alpha == 2);
    CHECK(std::get<CycleCertificate>(bare.certificate).cycle == VertexSet{0, 1, 2, 3, 4});
    CHECK(validate_certificate(cycle_graph(5), bare));

    Graph adj = caterpillar_wheel({4, {0, 1}});
    Verdict good = caterpillar_wheel_excellent(adj);
    CHECK(good.excellent);
    CHECK(good.alpha == 3);
    CHECK(std::get<Matching>(good.certificate).perfect(adj));

    Graph opp = caterpillar_wheel({4, {0, 2}});
    Verdict bad = caterpillar_wheel_excellent(opp);
    CHECK_FALSE(bad.excellent);
    CHECK(std::get<NoCertificate>(bad.certificate).note == "no perfect matching");

    Verdict one = caterpillar_wheel_excellent(caterpillar_wheel({3, {0}}));
    CHECK_FALSE(one.excellent);
    CHECK(std::get<NoCertificate>(one.certificate).note == "single leg");
    CHECK(std::get<NoCertificate>(one.certificate).evidence == VertexSet{0});

    CHECK_THROWS_AS(caterpillar_wheel_excellent(path_graph(4)), std::invalid_argument);
}

TEST_CASE("plucking") {
    PluckTrace tr = pluck(spider());
    REQUIRE(tr.steps.size() == 1);
    CHECK(tr.steps[0].support == 4);
    CHECK(tr.steps[0].leaf == 5);
    CHECK(tr.residual_vertices == VertexSet{0, 1, 2, 3});
    CHECK(tr.residual.order() == 4);
    CHECK(tr.residual.size() == 4);

    // Stops plucking at order 4 even when a move is still available.
    PluckTrace small = pluck(square_tail());
    CHECK(small.steps.size() == 1);
    CHECK(small.residual_vertices == VertexSet{0, 1, 2, 3});

    // Any pluck order reaches the same residual.
    Graph g = two_tail_triangle();
    PluckTrace base = pluck(g);
    CHECK(base.residual_vertices == VertexSet{0, 1, 2});
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PluckTrace t = pluck_with_order(g, seed);
        CHECK(t.residual_vertices == base.residual_vertices);
        PluckTrace again = pluck_with_order(g, seed);
        CHECK(again.steps.size() == t.steps.size());
        for (size_t i = 0; i < t.steps.size(); ++i) {
            CHECK(again.steps[i].support == t.steps[i].support);
            CHECK(again.steps[i].leaf == t.steps[i].leaf);
        }
    }
}

TEST_CASE("unicyclic graphs") {
    Verdict cyc = unicyclic_excellent(square_tail());
    CHECK(cyc.excellent);
    CHECK(cyc.alpha == 3); // one plucked pair plus half the residual square
    const auto& cert = std::get<UnicyclicCertificate>(cyc.certificate);
    REQUIRE(cert.steps.size() == 1);
    CHECK(cert.residual_vertices == VertexSet{0, 1, 2, 3});
    REQUIRE(cert.residual_cycle.has_value());
    CHECK_FALSE(cert.residual_matching.has_value());
    CHECK(validate_certificate(square_tail(), cyc));

    Graph wheel = caterpillar_wheel({4, {0, 1}});
    Verdict mat = unicyclic_excellent(wheel);
    CHECK(mat.excellent);
    CHECK(mat.alpha == 3);
    const auto& mcert = std::get<UnicyclicCertificate>(mat.certificate);
    CHECK(mcert.steps.empty());
    REQUIRE(mcert.residual_matching.has_value());
    CHECK(mcert.residual_matching->edges.size() == 3);
    CHECK(validate_certificate(wheel, mat));

    Verdict leg = unicyclic_excellent(spider());
    CHECK_FALSE(leg.excellent);
    CHECK(std::get<NoCertificate>(leg.certificate).note == "plucked graph has a single leg");
    CHECK(std::get<NoCertificate>(leg.certificate).evidence == VertexSet{0});

    Verdict tri = unicyclic_excellent(two_tail_triangle());
    CHECK(tri.excellent); // residual is the bare triangle
    CHECK(tri.alpha == 3);
    CHECK(std::get<UnicyclicCertificate>(tri.certificate).residual_cycle.has_value());

    CHECK_THROWS_AS(unicyclic_excellent(path_graph(4)), std::invalid_argument);
}

TEST_CASE("simplicial graphs") {
    Graph pos = corona(cycle_graph(3), complete_graph(1));
    Verdict v = simplicial_excellent(pos);
    CHECK(v.excellent);
    CHECK(v.alpha == 3);
    CHECK(std::get<SimplexPartition>(v.certificate).simplexes.size() == 3);
    CHECK(validate_certificate(pos, v));

    Verdict neg = simplicial_excellent(bowtie());
    CHECK_FALSE(neg.excellent);
    CHECK(std::get<NoCertificate>(neg.certificate).note == "vertex in two simplexes");
    CHECK(std::get<NoCertificate>(neg.certificate).evidence == VertexSet{0});

    CHECK_FALSE(simplicial_excellent(star(2)).excellent);
    CHECK_THROWS_AS(simplicial_excellent(path_graph(5)), std::invalid_argument);
}

TEST_CASE("clique covers") {
    CliqueCoverBuild b = build_successive_clique_cover(path_graph(4));
    CHECK(b.complete);
    CHECK(b.cover.parts.size() == 2);
    CHECK(verify_successive_clique_cover(path_graph(4), b.cover));

    CHECK_FALSE(build_successive_clique_cover(cycle_graph(4)).complete);
    CHECK(build_successive_clique_cover(cycle_graph(4)).leftover.size() == 4);

    SuccessiveCliqueCover not_partition{{{0, 1}, {1, 2, 3}}};
    CHECK_THROWS_AS(verify_successive_clique_cover(path_graph(4), not_partition),
                    std::invalid_argument);
}

TEST_CASE("chordal graphs") {
    Verdict one = chordal_excellent(complete_graph(4));
    CHECK(one.excellent);
    CHECK(one.alpha == 1);
    CHECK(validate_certificate(complete_graph(4), one));

    Verdict two = chordal_excellent(path_graph(4));
    CHECK(two.excellent);
    CHECK(two.alpha == 2);

    Verdict bridge = chordal_excellent(two_triangle_bridge());
    CHECK(bridge.excellent);
    CHECK(bridge.alpha == 2);
    CHECK(validate_certificate(two_triangle_bridge(), bridge));

    Verdict star2 = chordal_excellent(star(2));
    CHECK_FALSE(star2.excellent);
    CHECK(std::get<NoCertificate>(star2.certificate).note ==
          "clique-cover transversal condition fails");

    Verdict tail = chordal_excellent(diamond_tail());
    CHECK_FALSE(tail.excellent);

    CHECK_THROWS_AS(chordal_excellent(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("block graphs") {
    Graph g = two_triangle_bridge();
    Verdict v = block_excellent(g);
    CHECK(v.excellent);
    CHECK(v.alpha == 2);
    auto covers = all_perfect_block_covers(g);
    REQUIRE(covers.size() == 1);
    CHECK(std::get<PerfectBlockCover>(v.certificate).block_indices == covers[0]);
    CHECK(validate_certificate(g, v));

    Verdict path = block_excellent(path_graph(6));
    CHECK(path.excellent);
    CHECK(path.alpha == 3);
    CHECK(all_perfect_block_covers(path_graph(6)).size() == 1);

    Verdict neg = block_excellent(star(2));
    CHECK_FALSE(neg.excellent);
    CHECK(std::get<NoCertificate>(neg.certificate).note == "no perfect block-cover");
    CHECK(all_perfect_block_covers(star(2)).empty());

    CHECK_THROWS_AS(block_excellent(cycle_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(block_excellent(make(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("coronas") {
    CoronaSpec pos{cycle_graph(4),
                   {complete_graph(3), complete_graph(3), complete_graph(3), complete_graph(3)}};
    Verdict v = corona_excellent(pos);
    CHECK(v.excellent);
    CHECK(v.alpha == 4);
    CHECK(std::get<SimplexPartition>(v.certificate).simplexes.size() == 4);
    CHECK(validate_certificate(corona(pos), v));

    CoronaSpec neg{path_graph(2), {empty_graph(2), complete_graph(1)}};
    Verdict w = corona_excellent(neg);
    CHECK_FALSE(w.excellent);
    const auto& nc = std::get<NoCertificate>(w.certificate);
    CHECK(nc.note.find("not complete") != std::string::npos);
    CHECK(nc.evidence == VertexSet{2, 3});
}

TEST_CASE("rotation families") {
    Verdict v = petersen_excellent(5, 2);
    CHECK(v.excellent);
    CHECK(v.alpha == 4);
    const auto& fam = std::get<IndependentSetFamily>(v.certificate);
    CHECK(fam.set_size == 4);
    CHECK(fam.sets.size() == 5);
    CHECK(validate_certificate(generalized_petersen(5, 2), v));

    CHECK(petersen_excellent(4, 2).alpha == 3);
    CHECK(petersen_excellent(4, 1).alpha == 4);
    CHECK(petersen_excellent(7, 2).alpha == 5);
}

TEST_CASE("dispatcher picks the most specific method") {
    CHECK(recognize(path_graph(6)).method == method::tree);
    CHECK(recognize(cycle_graph(6)).method == method::unicyclic);
    CHECK(recognize(k33()).method == method::bipartite);
    CHECK(recognize(two_triangle_bridge()).method == method::block);
    CHECK(recognize(corona(cycle_graph(4), complete_graph(2))).method == method::simplicial);
    CHECK(recognize(diamond_tail()).method == method::chordal);
    CHECK(recognize(star(2)).method == method::quick_reject);
    CHECK(recognize(bowtie()).method == method::quick_reject);
    CHECK(recognize(complete_graph(1)).method == method::base_case);
    CHECK(recognize(complete_graph(2)).method == method::base_case);
    CHECK(recognize(make(0, {})).method == method::base_case);

    Verdict simp = recognize(corona(cycle_graph(4), complete_graph(2)));
    CHECK(simp.excellent);
    CHECK(simp.alpha == 4);
    CHECK_FALSE(recognize(diamond_tail()).excellent);
}

TEST_CASE("dispatcher falls back to search") {
    Graph g = generalized_petersen(5, 2);
    Verdict v = recognize(g);
    CHECK(v.method == method::oracle);
    CHECK(v.fallback_used);
    CHECK(v.excellent);
    CHECK(v.alpha == 4);
    CHECK(validate_certificate(g, v));

    RecognizeOptions starve{0, false};
    CHECK_THROWS_AS(recognize(g, starve), BudgetExhausted);

    // C_6 plus the chord 0-2: neither bipartite, chordal, simplicial, nor a
    // block graph, so only the searcher can decide it. Vertices 0, 2, 4 sit in
    // no largest independent set.
    Graph h = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}});
    Verdict w = recognize(h);
    CHECK(w.method == method::oracle);
    CHECK(w.fallback_used);
    CHECK_FALSE(w.excellent);
    CHECK(w.alpha == 3);
    CHECK(std::get<NoCertificate>(w.certificate).evidence == VertexSet{0, 2, 4});
    CHECK(validate_certificate(h, w));
}

TEST_CASE("dispatcher splits into components") {
    Graph g = make(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 4}});
    Verdict v = recognize(g);
    CHECK(v.method == method::components);
    CHECK(v.excellent);
    CHECK(v.alpha == 3);
    REQUIRE(v.component_verdicts.size() == 2);
    CHECK(v.component_verdicts[0].method == method::tree);
    CHECK(v.component_verdicts[1].method == method::unicyclic);
    CHECK(validate_certificate(g, v));

    Graph mixed = make(5, {{0, 1}, {1, 2}}); // P_3 plus two isolated vertices
    Verdict m = recognize(mixed);
    CHECK(m.method == method::components);
    CHECK_FALSE(m.excellent); // the P_3 component fails
    // negative component verdicts carry no alpha, so neither does the union
    CHECK_FALSE(m.alpha.has_value());
}

TEST_CASE("certificates reject tampering") {
    Graph p6 = path_graph(6);
    Verdict tree = tree_excellent(p6);
    std::get<Matching>(tree.certificate).edges.pop_back();
    CHECK_FALSE(validate_certificate(p6, tree));

    Graph st = square_tail();
    Verdict uni = unicyclic_excellent(st);
    std::get<UnicyclicCertificate>(uni.certificate).residual_vertices.pop_back();
    CHECK_FALSE(validate_certificate(st, uni));

    Graph g = two_triangle_bridge();
    Verdict blk = block_excellent(g);
    auto& idx = std::get<PerfectBlockCover>(blk.certificate).block_indices;
    idx.push_back(idx.front());
    CHECK_FALSE(validate_certificate(g, blk));

    Graph p52 = generalized_petersen(5, 2);
    Verdict pet = petersen_excellent(5, 2);
    std::get<IndependentSetFamily>(pet.certificate).set_size += 1;
    CHECK_FALSE(validate_certificate(p52, pet));

    Verdict qr = recognize(star(2));
    qr.excellent = true; // negative certificate cannot prove a positive claim
    CHECK_FALSE(validate_certificate(star(2), qr));

    Graph pos = corona(cycle_graph(3), complete_graph(1));
    Verdict sim = simplicial_excellent(pos);
    std::get<SimplexPartition>(sim.certificate).simplexes.pop_back();
    CHECK_FALSE(validate_certificate(pos, sim));
}

TEST_CASE("recognized verdicts match the searcher") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        for (RandomKind kind : {RandomKind::tree, RandomKind::unicyclic, RandomKind::chordal,
                                RandomKind::block, RandomKind::bipartite}) {
            Graph g = random_family(kind, 9, seed);
            Verdict v = recognize(g);
            AnalysisReport r = analyze(g);
            CHECK(v.excellent == r.excellent);
            if (v.alpha) CHECK(*v.alpha == r.alpha);
            CHECK(validate_certificate(g, v));
        }
    }
}
