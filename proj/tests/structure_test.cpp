#include "axg/structure.hpp"

#include "axg/families.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>

using namespace axg;
using axg_test::bowtie;
using axg_test::make;
using axg_test::two_triangle_bridge;

TEST_CASE("components and connectivity") {
    Graph g = make(6, {{0, 1}, {2, 3}, {3, 4}});
    auto comp = components(g);
    REQUIRE(comp.size() == 3);
    CHECK(comp[0] == VertexSet{0, 1});
    CHECK(comp[1] == VertexSet{2, 3, 4});
    CHECK(comp[2] == VertexSet{5});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(make(0, {})));
    CHECK(is_connected(make(1, {})));
    CHECK(is_connected(path_graph(5)));
}

TEST_CASE("tree and unicyclic predicates") {
    CHECK(is_tree(path_graph(4)));
    CHECK(is_tree(star(3)));
    CHECK_FALSE(is_tree(cycle_graph(3)));
    CHECK_FALSE(is_tree(make(4, {{0, 1}, {2, 3}}))); // forest, not tree
    CHECK(is_unicyclic(cycle_graph(5)));
    CHECK(is_unicyclic(caterpillar_wheel({4, {0, 1}})));
    CHECK_FALSE(is_unicyclic(path_graph(4)));
    CHECK_FALSE(is_unicyclic(complete_graph(4)));
}

TEST_CASE("bipartition") {
    auto bp = bipartition(cycle_graph(6));
    REQUIRE(bp.has_value());
    CHECK(bp->a == VertexSet{0, 2, 4});
    CHECK(bp->b == VertexSet{1, 3, 5});
    CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
    auto forest = bipartition(make(3, {}));
    REQUIRE(forest.has_value());
    CHECK(forest->a == VertexSet{0, 1, 2});
}

TEST_CASE("girth") {
    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK(girth(cycle_graph(3)) == 3);
    CHECK(girth(cycle_graph(7)) == 7);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(generalized_petersen(5, 2)) == 5);
    CHECK(girth(caterpillar_wheel({5, {0, 2}})) == 5);
}

TEST_CASE("block decomposition") {
    Graph g = two_triangle_bridge();
    auto bd = blocks(g);
    REQUIRE(bd.blocks.size() == 3);
    std::vector<VertexSet> sorted = bd.blocks;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::find(sorted.begin(), sorted.end(), VertexSet{0, 1, 2}) != sorted.end());
    CHECK(std::find(sorted.begin(), sorted.end(), VertexSet{2, 3}) != sorted.end());
    CHECK(std::find(sorted.begin(), sorted.end(), VertexSet{3, 4, 5}) != sorted.end());
    CHECK(bd.cut_vertices == VertexSet{2, 3});
    // vertex 2 sits in two blocks
    CHECK(bd.membership[2].size() == 2);
    CHECK(bd.membership[0].size() == 1);

    auto single = blocks(cycle_graph(4));
    CHECK(single.blocks.size() == 1);
    CHECK(single.cut_vertices.empty());

    auto isolated = blocks(make(3, {{0, 1}}));
    REQUIRE(isolated.blocks.size() == 2); // the edge plus the singleton {2}
    std::sort(isolated.blocks.begin(), isolated.blocks.end());
    CHECK(isolated.blocks[1] == VertexSet{2});
}

TEST_CASE("block graph recognition") {
    CHECK(is_block_graph(two_triangle_bridge()));
    CHECK(is_block_graph(path_graph(5)));
    CHECK(is_block_graph(bowtie()));
    CHECK(is_block_graph(complete_graph(4)));
    CHECK_FALSE(is_block_graph(cycle_graph(4)));
    CHECK_FALSE(is_block_graph(generalized_petersen(5, 2)));
}

TEST_CASE("simplicial vertices and simplexes") {
    Graph p4 = path_graph(4);
    CHECK(is_simplicial_vertex(p4, 0));
    CHECK_FALSE(is_simplicial_vertex(p4, 1));
    auto sx = simplexes(p4);
    CHECK(sx.simplicial_vertices == VertexSet{0, 3});
    REQUIRE(sx.simplexes.size() == 2);
    CHECK(sx.simplexes[0] == VertexSet{0, 1});
    CHECK(sx.simplexes[1] == VertexSet{2, 3});
    CHECK_FALSE(is_simplicial_graph(path_graph(5))); // middle vertex in no simplex
    CHECK(is_simplicial_graph(p4));
    CHECK(is_simplicial_graph(star(2))); // overlapping simplexes still cover
    auto sk = simplexes(complete_graph(3));
    CHECK(sk.simplexes.size() == 1); // identical closed neighborhoods dedupe
    CHECK(sk.simplexes[0] == VertexSet{0, 1, 2});
}

TEST_CASE("perfect elimination orders and chordality") {
    CHECK(is_chordal(path_graph(6)));
    CHECK(is_chordal(complete_graph(5)));
    CHECK(is_chordal(two_triangle_bridge()));
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK_FALSE(is_chordal(cycle_graph(6)));
    CHECK_FALSE(is_chordal(generalized_petersen(4, 1)));
    auto peo = perfect_elimination_order(two_triangle_bridge());
    REQUIRE(peo.has_value());
    CHECK(peo->size() == 6);
    CHECK_FALSE(perfect_elimination_order(cycle_graph(5)).has_value());
}

TEST_CASE("strong support vertices") {
    CHECK(strong_support_vertices(double_star(2, 2)) == VertexSet{0, 1});
    CHECK(strong_support_vertices(star(3)) == VertexSet{0});
    CHECK(strong_support_vertices(path_graph(4)).empty());
    CHECK(strong_support_vertices(path_graph(3)) == VertexSet{1});
}

TEST_CASE("classification flags") {
    auto c = classify(path_graph(4));
    CHECK(c.connected);
    CHECK(c.tree);
    CHECK(c.bipartite);
    CHECK(c.chordal);
    CHECK(c.block_graph);
    CHECK(c.simplicial);
    CHECK_FALSE(c.unicyclic);
    CHECK_FALSE(c.complete);

    auto k = classify(complete_graph(3));
    CHECK(k.complete);
    CHECK(k.chordal);
    CHECK_FALSE(k.bipartite);
    CHECK(k.unicyclic); // C_3 is both complete and unicyclic

    auto p = classify(generalized_petersen(5, 2));
    CHECK(p.connected);
    CHECK_FALSE(p.tree);
    CHECK_FALSE(p.unicyclic);
    CHECK_FALSE(p.bipartite);
    CHECK_FALSE(p.chordal);
    CHECK_FALSE(p.block_graph);
    CHECK_FALSE(p.simplicial);
    CHECK(p.component_list.size() == 1);
}

TEST_CASE("unique cycle extraction") {
    auto c5 = unique_cycle(cycle_graph(5));
    REQUIRE(c5.has_value());
    CHECK(*c5 == VertexSet{0, 1, 2, 3, 4});
    // C_3 with a hanging path: cycle is recovered without the tail.
    Graph g = make(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}});
    auto c = unique_cycle(g);
    REQUIRE(c.has_value());
    CHECK(*c == VertexSet{0, 1, 2});
    CHECK_FALSE(unique_cycle(path_graph(4)).has_value());
    CHECK_FALSE(unique_cycle(complete_graph(4)).has_value());
}

TEST_CASE("caterpillar wheel view") {
    Graph g = caterpillar_wheel({4, {0, 1}});
    auto cw = as_caterpillar_wheel(g);
    REQUIRE(cw.has_value());
    CHECK(cw->cycle == VertexSet{0, 1, 2, 3});
    REQUIRE(cw->legs.size() == 2);
    CHECK(cw->legs[0] == std::pair<int, int>{0, 4});
    CHECK(cw->legs[1] == std::pair<int, int>{1, 5});
    // Legs must hang directly on the cycle.
    Graph far = make(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}});
    CHECK_FALSE(as_caterpillar_wheel(far).has_value());
    auto bare = as_caterpillar_wheel(cycle_graph(6));
    REQUIRE(bare.has_value());
    CHECK(bare->legs.empty());
}

TEST_CASE("leg gaps walk the cycle") {
    auto g1 = as_caterpillar_wheel(caterpillar_wheel({6, {0, 2}}));
    REQUIRE(g1.has_value());
    auto gaps = consecutive_leg_gaps(*g1);
    std::sort(gaps.begin(), gaps.end());
    CHECK(gaps == std::vector<int>{2, 4});
    auto g2 = as_caterpillar_wheel(caterpillar_wheel({6, {0, 3}}));
    auto gaps2 = consecutive_leg_gaps(*g2);
    CHECK(gaps2 == std::vector<int>{3, 3});
    auto g3 = as_caterpillar_wheel(caterpillar_wheel({5, {2}}));
    CHECK(consecutive_leg_gaps(*g3).empty());
}

TEST_CASE("isomorphism checker") {
    CHECK(isomorphic(cycle_graph(5), make(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}})));
    CHECK_FALSE(isomorphic(cycle_graph(6), make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
    CHECK(isomorphic(cartesian_product(cycle_graph(4), complete_graph(2)), generalized_petersen(4, 1)));
    CHECK(isomorphic(generalized_petersen(7, 2), generalized_petersen(7, 3)));
    CHECK_FALSE(isomorphic(generalized_petersen(6, 2), generalized_petersen(6, 1)));
    CHECK(isomorphic(make(0, {}), make(0, {})));
    CHECK_FALSE(isomorphic(path_graph(4), star(3)));
}
