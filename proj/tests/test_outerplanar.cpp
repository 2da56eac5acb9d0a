#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pcc/chordal.hpp"
#include "pcc/generators.hpp"
#include "pcc/outerplanar.hpp"
#include "pcc/verifier.hpp"
#include "test_util.hpp"

using namespace pcc;
using pcc_test::make_graph;

TEST_CASE("layout finder on the small examples") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    auto layout = find_outerplanar_layout(p3);
    REQUIRE(layout.has_value());
    CHECK(layout->order == std::vector<int>{0, 1, 2});

    CHECK(!find_outerplanar_layout(complete_graph(4)).has_value());

    Graph c5 = cycle_graph(5);
    auto cyc = find_outerplanar_layout(c5);
    REQUIRE(cyc.has_value());
    // The order must walk the unique Hamiltonian cycle.
    for (int i = 0; i < 5; ++i)
        CHECK(c5.has_edge(cyc->order[static_cast<std::size_t>(i)],
                          cyc->order[static_cast<std::size_t>((i + 1) % 5)]));

    Graph k23 = make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(!find_outerplanar_layout(k23).has_value());
}

TEST_CASE("layout finder on glued blocks and random instances") {
    // Two triangles sharing a cut vertex plus a pendant path.
    Graph g = make_graph(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}});
    auto layout = find_outerplanar_layout(g);
    REQUIRE(layout.has_value());
    CHECK(layout_is_noncrossing(g, *layout));

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto gen = random_maximal_outerplanar(20 + static_cast<int>(seed), seed);
        auto found = find_outerplanar_layout(gen.graph);
        REQUIRE(found.has_value());
        CHECK(layout_is_noncrossing(gen.graph, *found));
    }
}

TEST_CASE("layout finder agrees with the exhaustive test on random graphs") {
    int outerplanar_seen = 0, rejected_seen = 0;
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        int n = 5 + static_cast<int>(seed % 3);
        Graph g = pcc_test::random_test_graph(n, 0.25 + 0.05 * static_cast<double>(seed % 5),
                                              seed * 11 + 2);
        bool expected = pcc_test::brute_is_outerplanar(g);
        auto found = find_outerplanar_layout(g);
        CHECK(found.has_value() == expected);
        if (found) {
            CHECK(layout_is_noncrossing(g, *found));
            ++outerplanar_seen;
        } else {
            ++rejected_seen;
        }
    }
    CHECK(outerplanar_seen > 20);
    CHECK(rejected_seen > 20);
}

TEST_CASE("layout finder rejects classic non-outerplanar shapes") {
    // Wheel on five spokes.
    Graph wheel = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                 {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK(!find_outerplanar_layout(wheel).has_value());

    // Two K4 blocks sharing a cut vertex.
    Graph twin = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(!find_outerplanar_layout(twin).has_value());
}

TEST_CASE("subgraphs of maximal outerplanar graphs keep layouts") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto gen = random_maximal_outerplanar(24, seed + 100);
        // Drop a third of the edges.
        Graph sparse(24);
        Rng rng(seed);
        for (auto [u, v] : gen.graph.edges())
            if (!rng.chance(1, 3))
                sparse.add_edge(u, v);
        auto layout = find_outerplanar_layout(sparse);
        REQUIRE(layout.has_value());
        CHECK(layout_is_noncrossing(sparse, *layout));
    }
}

TEST_CASE("completion on small fixed graphs") {
    Graph c4 = cycle_graph(4);
    auto [gp, layout] = complete_to_maximal_outerplanar(c4);
    CHECK(gp.edge_count() == 5);
    CHECK(gp.has_edge(0, 2));  // fan from vertex 0

    Graph k3 = complete_graph(3);
    auto [gp3, l3] = complete_to_maximal_outerplanar(k3);
    CHECK(gp3 == k3);

    CHECK_THROWS_AS(complete_to_maximal_outerplanar(complete_graph(4)), input_error);
}

TEST_CASE("completion always yields a chordal 2-tree containing the input") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        int n = 5 + static_cast<int>(seed % 14);
        auto gen = random_maximal_outerplanar(n, seed * 3 + 1);
        Graph sparse(n);
        Rng rng(seed);
        for (auto [u, v] : gen.graph.edges())
            if (!rng.chance(2, 5))
                sparse.add_edge(u, v);
        auto [gp, layout] = complete_to_maximal_outerplanar(sparse);
        CHECK(gp.edge_count() == static_cast<std::size_t>(2 * n - 3));
        CHECK(is_chordal(gp).chordal);
        CHECK(layout_is_noncrossing(gp, layout));
        for (auto [u, v] : sparse.edges()) CHECK(gp.has_edge(u, v));
    }
}

TEST_CASE("in-order tree structure") {
    for (int p = 1; p <= 40; ++p) {
        InOrderTree tree(p);
        CHECK(tree.height() == ceil_log2(p + 1));
        CHECK(tree.ancestors_of(0).empty());
        for (int l = 1; l <= p; ++l) {
            const auto& anc = tree.ancestors_of(l);
            CHECK(static_cast<int>(anc.size()) <= tree.height());
            CHECK(std::find(anc.begin(), anc.end(), l) != anc.end());
        }
        // Cyclically consecutive labels have nested ancestor sets.
        for (int l = 0; l <= p; ++l) {
            auto a = tree.ancestors_of(l);
            auto b = tree.ancestors_of((l + 1) % (p + 1));
            std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
            bool nested = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()) ||
                          std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
            CHECK(nested);
        }
    }
}

TEST_CASE("shadows") {
    // Fan: apex in layer 0, the path in layer 1; nothing above layer 1.
    Graph fan = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    auto lay = bfs_layering(fan);
    CHECK(shadows(fan, lay, 1).empty());

    // Two stacked triangles: the top vertex's shadow is its two neighbors,
    // which are adjacent.
    Graph stacked = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}});
    auto lay2 = bfs_layering(stacked);
    auto sh1 = shadows(stacked, lay2, 1);
    REQUIRE(sh1.size() == 1);
    CHECK(sh1[0].component == std::vector<int>{3, 4});
    CHECK(sh1[0].shadow == std::vector<int>{1, 2});
    CHECK(stacked.has_edge(1, 2));

    // Disconnected above-graph: one entry per component.
    Graph twin = make_graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
    auto lay3 = bfs_layering(twin);
    auto sh2 = shadows(twin, lay3, 1);
    CHECK(sh2.size() == 2);

    // Non-chordal input refused.
    CHECK_THROWS_AS(shadows(cycle_graph(4), bfs_layering(cycle_graph(4)), 0), input_error);
}

TEST_CASE("palette bound formula") {
    CHECK(outerplanar_palette_bound(1) == 4);
    CHECK(outerplanar_palette_bound(2) == 9);
    CHECK(outerplanar_palette_bound(3) == 13);
    CHECK(outerplanar_palette_bound(4) == 21);
}

TEST_CASE("tree of fans F(2,3) gets a verified 2-centered coloring within 9 colors") {
    Graph f23 = tree_of_fans(2, 3);
    auto col = color_outerplanar(f23, 2);
    CHECK(col.distinct_used() <= 9);
    CHECK(is_p_centered(f23, col, 2, VerifyMode::subsets).ok);
}

TEST_CASE("random maximal outerplanar graphs color and verify") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto gen = random_maximal_outerplanar(40, seed + 2000);
        for (int p = 1; p <= 3; ++p) {
            auto col = color_outerplanar(gen.graph, p);
            CHECK(col.distinct_used() <= outerplanar_palette_bound(p));
            CHECK(is_p_centered(gen.graph, col, p, VerifyMode::growth).ok);
        }
    }
}

TEST_CASE("colorings of tiny outerplanar graphs pass the brute-force definition") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto gen = random_maximal_outerplanar(5 + static_cast<int>(seed % 6), seed + 40);
        // Also drop some edges to exercise non-maximal inputs.
        Graph sparse(gen.graph.vertex_count());
        Rng rng(seed);
        for (auto [u, v] : gen.graph.edges())
            if (!rng.chance(1, 4))
                sparse.add_edge(u, v);
        for (int p = 1; p <= 3; ++p) {
            auto full = color_outerplanar(gen.graph, p).flat_all();
            CHECK(pcc_test::brute_is_p_centered(gen.graph, full, p));
            auto partial = color_outerplanar(sparse, p).flat_all();
            CHECK(pcc_test::brute_is_p_centered(sparse, partial, p));
        }
    }
}

TEST_CASE("coloring is deterministic") {
    auto gen = random_maximal_outerplanar(35, 77);
    CHECK(color_outerplanar(gen.graph, 3) == color_outerplanar(gen.graph, 3));
}

TEST_CASE("disconnected and degenerate inputs") {
    Graph two_triangles = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto col = color_outerplanar(two_triangles, 2);
    CHECK(is_p_centered(two_triangles, col, 2, VerifyMode::subsets).ok);

    Graph single(1);
    CHECK(color_outerplanar(single, 1).n() == 1);

    Graph empty(0);
    CHECK(color_outerplanar(empty, 1).n() == 0);

    CHECK_THROWS_AS(color_outerplanar(complete_graph(4), 2), input_error);
}

TEST_CASE("provided layouts are honored and validated") {
    Graph c4 = cycle_graph(4);
    OuterplanarLayout good{{0, 1, 2, 3}};
    auto col = color_outerplanar(c4, 2, good);
    CHECK(is_p_centered(c4, col, 2, VerifyMode::subsets).ok);

    OuterplanarLayout crossing{{0, 2, 1, 3}};
    CHECK_THROWS_AS(color_outerplanar(c4, 2, crossing), input_error);
    CHECK_THROWS_AS(complete_to_maximal_outerplanar(c4, crossing), input_error);
}
