#include <random>

#include "doctest.h"
#include "ffs/family.hpp"
#include "ffs/homomorphism.hpp"
#include "test_util.hpp"

using namespace ffsg;

TEST_CASE("bad_count equals the from-the-definition brute force") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = testutil::random_graph(n, 0.35, rng());
        PartialColoring chi(n);
        int colors = 2 + static_cast<int>(rng() % 5);
        for (int v = 0; v < n; ++v)
            if (rng() % 4 != 0) chi.set(v, static_cast<int>(rng() % colors));
        for (int v = 0; v < n; ++v) {
            if (!chi.is_colored(v)) continue;
            CHECK(bad_count(v, chi, g) == testutil::brute_bad(v, chi, g));
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("bad_count_with matches recolor-then-count") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 9);
        Graph g = testutil::random_graph(n, 0.4, rng());
        PartialColoring chi(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 3 != 0) chi.set(v, static_cast<int>(rng() % 4));
        int v = static_cast<int>(rng() % n);
        int c = static_cast<int>(rng() % 4);
        PartialColoring recolored = chi;
        recolored.set(v, c);
        CHECK(bad_count_with(v, c, chi, g) == testutil::brute_bad(v, recolored, g));
    }
}

TEST_CASE("locally injective hom counts: pinned values") {
    CHECK(count_locally_injective_homs(cycle_graph(4), complete_graph(3), false) == 0);
    CHECK(count_locally_injective_homs(cycle_graph(6), complete_graph(3), false) == 6);
    CHECK(count_locally_injective_homs(cycle_graph(3), complete_graph(3), false) == 6);
    // C5 -> K3: odd closed walk of length 5 with distinct consecutive
    // neighborhoods does not exist in a triangle
    CHECK(count_locally_injective_homs(cycle_graph(5), complete_graph(3), false) == 0);
    // K_{1,2} -> K3: center has 3 choices, leaves ordered injective: 3*2 = 6
    CHECK(count_locally_injective_homs(complete_bipartite(1, 2), complete_graph(3), false) == 6);
}

TEST_CASE("hom counts equal exhaustive map enumeration") {
    std::vector<Graph> patterns{cycle_graph(3),  cycle_graph(4), cycle_graph(5),
                                cycle_graph(6),  path_graph(4),  complete_bipartite(2, 3),
                                complete_graph(4)};
    std::vector<Graph> targets{complete_graph(3), complete_graph(4), cycle_graph(5),
                               cycle_graph(7), complete_bipartite(3, 3),
                               testutil::random_graph(7, 0.5, 5), testutil::random_graph(6, 0.6, 6)};
    for (const Graph& f : patterns)
        for (const Graph& t : targets) {
            long want = testutil::brute_homs(f, t);
            CHECK(count_locally_injective_homs(f, t, false) == want);
            CHECK(count_locally_injective_homs(f, t, true) == (want > 0 ? 1 : 0));
        }
}

TEST_CASE("disconnected patterns factor over components") {
    // two disjoint triangles
    Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    long one = count_locally_injective_homs(cycle_graph(3), complete_graph(4), false);
    CHECK(count_locally_injective_homs(two_triangles, complete_graph(4), false) == one * one);
}

TEST_CASE("is_hom_free") {
    CHECK(is_hom_free(parse_family("C4"), complete_graph(3)));
    CHECK_FALSE(is_hom_free(parse_family("C6"), complete_graph(3)));
    CHECK_FALSE(is_hom_free(parse_family("C3-C5"), complete_graph(3)));
}

TEST_CASE("closedness witness search") {
    auto w = closedness_witness_search(parse_family("C6"), 5);
    REQUIRE(w.has_value());
    CHECK(w->num_vertices() == 3);
    CHECK(w->num_edges() == 3);  // K3: C6-free but hom*(C6, K3) = 6
    CHECK(!closedness_witness_search(parse_family("C4"), 5).has_value());
    CHECK(!closedness_witness_search(parse_family("C3"), 4).has_value());
}
