#include <doctest.h>

#include <string>

#include "homtrees/graph.hpp"
#include "homtrees/order.hpp"
#include "oracles.hpp"

using namespace homtrees;

TEST_CASE("parse_graph accepts the edge-list format") {
    Graph g = parse_graph("3 2\n0 1\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Graph single = parse_graph("1 0");
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    Graph commented = parse_graph("# image graph\n\n3 1\n# edge below\n0 2\n");
    CHECK(commented.edge_count() == 1);
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0"),
                         doctest::Contains("loop at line 2"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 5"),
                         doctest::Contains("line 2"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n0 1"),
                         doctest::Contains("duplicate edge at line 3"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("x y\n"),
                         doctest::Contains("malformed header"), GraphError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_graph(""), GraphError);
}

TEST_CASE("serialize round trip") {
    oracles::SplitMix64 rng{99ull};
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracles::random_graph(1 + static_cast<int>(rng.below(7)),
                                        rng.unit(), rng);
        Graph back = parse_graph(serialize_graph(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("as_tree classifies paths and stars") {
    Tree p2 = as_tree(path_graph(2));
    CHECK(p2.edge_count() == 2);
    CHECK(p2.leaf_set() == std::vector<int>{0, 2});
    CHECK(p2.is_star()); // S_2 = P_2

    Tree s4 = as_tree(star_graph(4));
    CHECK(s4.edge_count() == 4);
    CHECK(s4.leaf_set() == std::vector<int>{1, 2, 3, 4});
    CHECK(s4.is_star());

    Tree p3 = as_tree(path_graph(3));
    CHECK_FALSE(p3.is_star());

    CHECK_THROWS_WITH_AS(as_tree(cycle_graph(4)),
                         doctest::Contains("not a tree"), GraphError);
    CHECK_THROWS_WITH_AS(as_tree(edgeless_graph(2)),
                         doctest::Contains("unreachable"), GraphError);
}

TEST_CASE("skeleton of a path") {
    SkeletonInfo info = skeleton_info(as_tree(path_graph(4))); // 0-1-2-3-4
    CHECK(info.skeleton.vertex_count() == 3);
    CHECK(info.to_original == std::vector<int>{1, 2, 3});
    CHECK(info.attachment_at(1) == 1);
    CHECK(info.attachment_at(2) == 0);
    CHECK(info.attachment_at(3) == 1);
    CHECK(info.skeleton_leaves == std::vector<int>{1, 3});
}

TEST_CASE("skeleton of a star is its center") {
    SkeletonInfo info = skeleton_info(as_tree(star_graph(4)));
    CHECK(info.skeleton.vertex_count() == 1);
    CHECK(info.to_original == std::vector<int>{0});
    CHECK(info.attachment_at(0) == 4);
    CHECK(info.skeleton_leaves == std::vector<int>{0});
}

TEST_CASE("skeleton of a broom is K2") {
    // edge 0-1, leaves 2,3 at 0 and leaf 4 at 1
    Tree broom = as_tree(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}}));
    SkeletonInfo info = skeleton_info(broom);
    CHECK(info.skeleton.vertex_count() == 2);
    CHECK(info.attachment_at(0) == 2);
    CHECK(info.attachment_at(1) == 1);
    CHECK(info.skeleton_leaves == std::vector<int>{0, 1});
    CHECK_THROWS_AS(skeleton_info(as_tree(path_graph(1))), GraphError);
}

TEST_CASE("skeleton invariants over all small trees") {
    for (int k = 2; k <= 8; ++k) {
        for (const auto& entry : enumerate_free_trees(k)) {
            const Tree& t = entry.tree;
            SkeletonInfo info = skeleton_info(t);
            int total_attachment = 0;
            for (int a : info.attachment) total_attachment += a;
            CHECK(total_attachment == t.leaf_count());
            CHECK(info.skeleton.vertex_count() + t.leaf_count() ==
                  t.vertex_count());
            for (int b : info.skeleton_leaves) CHECK(info.attachment_at(b) >= 1);
            if (!t.is_star()) {
                CHECK(info.skeleton_leaves.size() >= 2);
            }
            CHECK(t.leaf_count() >= 2); // every tree on >= 2 vertices
        }
    }
}

TEST_CASE("spanning tree is BFS from 0 with ascending neighbors") {
    Tree t = spanning_tree(complete_graph(3));
    CHECK(t.graph().edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    Graph p = path_graph(3);
    CHECK(spanning_tree(p).graph().edges() == p.edges());

    CHECK_THROWS_WITH_AS(spanning_tree(edgeless_graph(2)),
                         doctest::Contains("unreachable"), GraphError);

    oracles::SplitMix64 rng{4242ull};
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(2 + static_cast<int>(rng.below(6)), 0.7, rng);
        if (!g.is_connected()) continue;
        Tree st = spanning_tree(g);
        CHECK(st.vertex_count() == g.vertex_count());
        for (auto e : st.graph().edges()) CHECK(g.has_edge(e.first, e.second));
    }
}

TEST_CASE("remove_edge") {
    Graph tri = complete_graph(3);
    Graph path = remove_edge(tri, 0, 1);
    CHECK(path.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

    Graph k2 = path_graph(1);
    CHECK(remove_edge(k2, 1, 0).edge_count() == 0);

    CHECK_THROWS_WITH_AS(remove_edge(path_graph(2), 0, 2),
                         doctest::Contains("not present"), GraphError);
}

TEST_CASE("graph constructor validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(-1, {}), GraphError);
}
