#include "axg/families.hpp"

#include "axg/structure.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace axg;

TEST_CASE("basic families") {
    CHECK(path_graph(1).size() == 0);
    CHECK(path_graph(5).size() == 4);
    CHECK(cycle_graph(3).size() == 3);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(complete_graph(5).size() == 10);
    CHECK(star(3).size() == 3);
    CHECK(star(3).degree(0) == 3);
    CHECK(double_star(2, 2).order() == 6);
    CHECK(double_star(2, 2).size() == 5);
    CHECK(empty_graph(4).size() == 0);
}

TEST_CASE("corona wiring and labels") {
    Graph g = corona(cycle_graph(3), complete_graph(1));
    CHECK(g.order() == 6);
    CHECK(g.size() == 6); // triangle + three pendants
    CHECK(g.label(3) == "0:0");
    CHECK(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(1, 3));

    Graph h = corona(cycle_graph(4), complete_graph(3));
    CHECK(h.order() == 16);
    // 4 cycle edges + 4 * (3 join edges + 3 clique edges)
    CHECK(h.size() == 4 + 4 * 6);

    CoronaSpec bad;
    bad.base = path_graph(2);
    bad.attachments.push_back(complete_graph(1));
    CHECK_THROWS_AS(corona(bad), std::invalid_argument);
}

TEST_CASE("general corona") {
    Graph g = general_corona(3, {2, 1, 1});
    CHECK(g.order() == 7);
    CHECK(g.label(0) == "b0");
    CHECK(g.label(3) == "b0:a0");
    // body triangle + attachments (2: one edge + two joins; 1+1: a join each)
    CHECK(g.size() == 3 + (1 + 2) + 1 + 1);
    CHECK(is_simplicial_graph(g));
    CHECK_THROWS_AS(general_corona(2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(general_corona(1, {0}), std::invalid_argument);
}

TEST_CASE("generalized petersen") {
    Graph p = generalized_petersen(5, 2);
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(p.label(0) == "v0");
    CHECK(p.label(5) == "u0");
    // k = n/2 folds the inner step edges into a matching
    Graph q = generalized_petersen(4, 2);
    CHECK(q.order() == 8);
    CHECK(q.size() == 4 + 4 + 2);
    CHECK_THROWS_AS(generalized_petersen(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generalized_petersen(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(generalized_petersen(5, 0), std::invalid_argument);
}

TEST_CASE("caterpillar wheels") {
    Graph g = caterpillar_wheel({4, {0, 1}});
    CHECK(g.order() == 6);
    CHECK(g.size() == 6);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(4) == 1);
    CHECK_THROWS_AS(caterpillar_wheel({4, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(caterpillar_wheel({4, {4}}), std::invalid_argument);
    CHECK_THROWS_AS(caterpillar_wheel({2, {}}), std::invalid_argument);
}

TEST_CASE("pendant path attachment") {
    Graph g = attach_k2(cycle_graph(3), 1);
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    CHECK(g.degree(3) == 2); // middle of the pendant path
    CHECK(g.degree(4) == 1);
    CHECK(g.adjacent(1, 3));
    CHECK(g.adjacent(3, 4));
    CHECK_FALSE(g.adjacent(1, 4));
    CHECK(g.label(3) == "1+");
    CHECK(g.label(4) == "1+'");
    CHECK_THROWS_AS(attach_k2(cycle_graph(3), 7), std::invalid_argument);
}

TEST_CASE("subdivision") {
    Graph s = subdivision(cycle_graph(3));
    CHECK(s.order() == 6);
    CHECK(s.size() == 6);
    CHECK(isomorphic(s, cycle_graph(6)));
    CHECK(s.label(3) == "0-1");
    Graph st = subdivision(star(3));
    CHECK(st.order() == 7);
    CHECK(isomorphic(st, axg_test::make(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})));
}

TEST_CASE("glued even cycles") {
    CHECK(cycle_tree(4, {}) == cycle_graph(4));
    Graph g = cycle_tree(4, {{0, 1}});
    CHECK(g.order() == 6);
    CHECK(g.size() == 7);
    CHECK(g.adjacent(0, 4));
    CHECK(g.adjacent(4, 5));
    CHECK(g.adjacent(5, 1));
    // second gluing may use an edge created by the first
    Graph h = cycle_tree(4, {{0, 1}, {4, 5}});
    CHECK(h.order() == 8);
    CHECK(h.size() == 10);
    CHECK_THROWS_AS(cycle_tree(4, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("cartesian product") {
    Graph g = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(isomorphic(g, cycle_graph(4)));
    Graph h = cartesian_product(cycle_graph(4), complete_graph(2));
    CHECK(h.order() == 8);
    CHECK(h.size() == 12);
    CHECK(h.label(0) == "0|0");
    for (int v = 0; v < 8; ++v) CHECK(h.degree(v) == 3);
    Graph p = cartesian_product(path_graph(2), path_graph(3));
    CHECK(p.order() == 6);
    CHECK(p.size() == 7);
}

TEST_CASE("random families are deterministic and well-shaped") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 3 + int(seed % 10);
        Graph t = random_family(RandomKind::tree, n, seed);
        CHECK(t == random_family(RandomKind::tree, n, seed));
        CHECK(is_tree(t));
        Graph u = random_family(RandomKind::unicyclic, n, seed);
        CHECK(is_unicyclic(u));
        Graph c = random_family(RandomKind::chordal, n, seed);
        CHECK(is_chordal(c));
        Graph b = random_family(RandomKind::block, n, seed);
        CHECK(is_block_graph(b));
        CHECK(is_connected(b));
        Graph bp = random_family(RandomKind::bipartite, n, seed);
        CHECK(is_connected(bp));
        CHECK(bipartition(bp).has_value());
    }
    CHECK(random_family(RandomKind::tree, 10, 1) != random_family(RandomKind::tree, 10, 2));
    CHECK(parse_random_kind("chordal") == RandomKind::chordal);
    CHECK_THROWS_AS(parse_random_kind("dense"), std::invalid_argument);
}

TEST_CASE("random gnp determinism") {
    Graph a = random_gnp(12, 30, 100, 7);
    CHECK(a == random_gnp(12, 30, 100, 7));
    CHECK(a.order() == 12);
    CHECK(a != random_gnp(12, 30, 100, 8));
}
