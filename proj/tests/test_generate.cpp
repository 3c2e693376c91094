#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "qgain/analysis.hpp"
#include "qgain/errors.hpp"
#include "qgain/generate.hpp"
#include "qgain/graph.hpp"
#include "qgain/json_io.hpp"
#include "qgain/rng.hpp"
#include "qgain/theorems.hpp"

using namespace qgain;

namespace {

using Q = Quaternion;

std::vector<int> iota_cycle(int n) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    return c;
}

} // namespace

// ---------------------------------------------------------------------------
// determinism
// ---------------------------------------------------------------------------

TEST_CASE("every generator is byte-deterministic in its seed") {
    CHECK(serialize_graph(type1_cycle(6, 42)) == serialize_graph(type1_cycle(6, 42)));
    CHECK(serialize_graph(rank2_kab(3, 4, 42)) == serialize_graph(rank2_kab(3, 4, 42)));
    CHECK(serialize_graph(extremal_union(12, 2, 42)) == serialize_graph(extremal_union(12, 2, 42)));
    CHECK(serialize_graph(random_pm_tree(10, 42)) == serialize_graph(random_pm_tree(10, 42)));
    CHECK(serialize_graph(random_connected(9, 3, 42)) == serialize_graph(random_connected(9, 3, 42)));
    CHECK(serialize_graph(random_graph(9, 42)) == serialize_graph(random_graph(9, 42)));
    CHECK(serialize_graph(random_tree(9, 42)) == serialize_graph(random_tree(9, 42)));
    CHECK(serialize_graph(random_isolated_free(8, 3, 42)) ==
          serialize_graph(random_isolated_free(8, 3, 42)));
    CHECK(serialize_graph(random_gains(cycle_skeleton(5), 42)) ==
          serialize_graph(random_gains(cycle_skeleton(5), 42)));

    CHECK(serialize_graph(random_graph(9, 42)) != serialize_graph(random_graph(9, 43)));
}

// ---------------------------------------------------------------------------
// type1_cycle
// ---------------------------------------------------------------------------

TEST_CASE("type1_cycle always lands in Type 1 with rank n-2") {
    for (Seed s = 0; s < 100; ++s) {
        const int n = 4 + 2 * static_cast<int>(s % 5);
        const GainGraph g = type1_cycle(n, split_seed(201, s));
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == n);
        CHECK(classify_cycle(g, iota_cycle(n)) == CycleType::type1);
        CHECK(graph_rank(g) == n - 2);
    }
    CHECK(check_connected_bound(type1_cycle(8, 3)).tight);
}

TEST_CASE("type1_cycle rejects odd or tiny orders") {
    CHECK_THROWS_AS((void)type1_cycle(5, 1), precondition_error);
    CHECK_THROWS_AS((void)type1_cycle(2, 1), precondition_error);
    CHECK_THROWS_AS((void)type1_cycle(0, 1), precondition_error);
}

// ---------------------------------------------------------------------------
// rank2_kab
// ---------------------------------------------------------------------------

TEST_CASE("rank2_kab builds a rank-2 complete bipartite graph") {
    for (Seed s = 0; s < 60; ++s) {
        const int a = 2 + static_cast<int>(s % 3);
        const int b = 2 + static_cast<int>((s / 3) % 3);
        const GainGraph g = rank2_kab(a, b, split_seed(211, s));
        CHECK(g.vertex_count() == a + b);
        CHECK(g.edge_count() == a * b);
        CHECK(!complete_bipartite_parts(g).empty());
        CHECK(graph_rank(g) == 2);
        CHECK(all_c4_type1(g, true));
    }
}

TEST_CASE("the 2x2 case is a Type 1 square") {
    const GainGraph g = rank2_kab(2, 2, 9);
    const auto cycles = enumerate_cycles(g, 4);
    REQUIRE(cycles.size() == 1);
    CHECK(classify_cycle(g, cycles[0]) == CycleType::type1);
}

TEST_CASE("rank2_kab rejects degenerate parts") {
    CHECK_THROWS_AS((void)rank2_kab(1, 3, 1), precondition_error);
    CHECK_THROWS_AS((void)rank2_kab(2, 1, 1), precondition_error);
    CHECK_THROWS_AS((void)rank2_kab(0, 0, 1), precondition_error);
}

// ---------------------------------------------------------------------------
// extremal_union
// ---------------------------------------------------------------------------

TEST_CASE("extremal_union assembles tight blocks of the requested degree") {
    const GainGraph g = extremal_union(12, 3, 7); // two K_{3,3} blocks
    CHECK(g.vertex_count() == 12);
    CHECK(components(g).size() == 2);
    CHECK(degrees(g).max_degree == 3);
    CHECK(graph_rank(g) == 4);
    CHECK(is_extremal_general(g));
    CHECK(check_general_bound(g).tight);

    const GainGraph m = extremal_union(8, 1, 8); // four disjoint edges
    CHECK(m.edge_count() == 4);
    CHECK(degrees(m).max_degree == 1);
    CHECK(graph_rank(m) == 8);
    CHECK(is_extremal_general(m));
}

TEST_CASE("extremal_union demands 2*delta | n") {
    CHECK_THROWS_AS((void)extremal_union(10, 3, 1), precondition_error);
    CHECK_THROWS_AS((void)extremal_union(7, 1, 1), precondition_error);
    CHECK_THROWS_AS((void)extremal_union(0, 2, 1), precondition_error);
    CHECK_THROWS_AS((void)extremal_union(4, 0, 1), precondition_error);
}

TEST_CASE("copies of extremal_union draw distinct gains") {
    const GainGraph g = extremal_union(8, 2, 31);
    const auto c = components(g);
    REQUIRE(c.size() == 2);
    const GainGraph b0 = induced(g, c[0]).graph;
    const GainGraph b1 = induced(g, c[1]).graph;
    CHECK(serialize_graph(b0) != serialize_graph(b1));
}

// ---------------------------------------------------------------------------
// random_pm_tree
// ---------------------------------------------------------------------------

TEST_CASE("random_pm_tree yields trees with a perfect matching") {
    for (Seed s = 0; s < 100; ++s) {
        const int n = 2 + 2 * static_cast<int>(s % 7);
        const GainGraph t = random_pm_tree(n, split_seed(221, s));
        CHECK(t.vertex_count() == n);
        CHECK(t.edge_count() == n - 1);
        CHECK(is_connected(t));
        const Matching m = max_matching(t);
        CHECK(m.perfect);
        CHECK(tree_rank(t) == n);
        for (const auto& [u, v] : m.edges) CHECK(t.has_edge(u, v));
    }
}

TEST_CASE("random_pm_tree rejects odd orders") {
    CHECK_THROWS_AS((void)random_pm_tree(5, 1), precondition_error);
    CHECK_THROWS_AS((void)random_pm_tree(0, 1), precondition_error);
}

// ---------------------------------------------------------------------------
// random_connected / random_tree / random_graph
// ---------------------------------------------------------------------------

TEST_CASE("random_connected respects the degree cap and stays connected") {
    for (Seed s = 0; s < 100; ++s) {
        const int n = 2 + static_cast<int>(s % 11);
        const int cap = 2 + static_cast<int>(s % 4);
        const GainGraph g = random_connected(n, cap, split_seed(231, s));
        CHECK(g.vertex_count() == n);
        CHECK(is_connected(g));
        CHECK(degrees(g).max_degree <= cap);
        if (degrees(g).max_degree >= 2) CHECK(check_connected_bound(g).holds);
    }
}

TEST_CASE("random_connected parameter checks") {
    CHECK_THROWS_AS((void)random_connected(0, 3, 1), precondition_error);
    CHECK_THROWS_AS((void)random_connected(3, 1, 1), precondition_error); // cap too small to connect
    CHECK_THROWS_AS((void)random_connected(5, 0, 1), precondition_error);
}

TEST_CASE("random_tree yields spanning trees") {
    for (Seed s = 0; s < 60; ++s) {
        const int n = 1 + static_cast<int>(s % 13);
        const GainGraph t = random_tree(n, split_seed(241, s));
        CHECK(t.vertex_count() == n);
        CHECK(t.edge_count() == n - 1);
        CHECK(is_connected(t));
    }
    CHECK_THROWS_AS((void)random_tree(0, 1), precondition_error);
}

TEST_CASE("random_graph stays simple and in range") {
    for (Seed s = 0; s < 60; ++s) {
        const int n = 1 + static_cast<int>(s % 12);
        const GainGraph g = random_graph(n, split_seed(251, s));
        CHECK(g.vertex_count() == n);
        std::set<std::pair<int, int>> seen;
        for (const auto& e : g.edges()) {
            CHECK(e.u < e.v);
            CHECK(e.v < n);
            CHECK(seen.insert({e.u, e.v}).second);
            CHECK(is_unit(e.gain));
        }
    }
}

// ---------------------------------------------------------------------------
// random_isolated_free
// ---------------------------------------------------------------------------

TEST_CASE("random_isolated_free leaves no vertex bare") {
    for (Seed s = 0; s < 100; ++s) {
        const int n = 2 + static_cast<int>(s % 11);
        const int cap = 2 + static_cast<int>(s % 4);
        const GainGraph g = random_isolated_free(n, cap, split_seed(261, s));
        const auto deg = degrees(g);
        CHECK(deg.max_degree <= cap);
        CHECK(*std::min_element(deg.degree.begin(), deg.degree.end()) >= 1);
        CHECK(check_general_bound(g).holds);
    }
}

TEST_CASE("cap one forces a perfect matching shape") {
    for (Seed s = 0; s < 40; ++s) {
        const int n = 2 + 2 * static_cast<int>(s % 6);
        const GainGraph g = random_isolated_free(n, 1, split_seed(271, s));
        CHECK(g.edge_count() == n / 2);
        CHECK(degrees(g).max_degree == 1);
        CHECK(graph_rank(g) == n);
    }
    CHECK_THROWS_AS((void)random_isolated_free(5, 1, 1), precondition_error);
    CHECK_THROWS_AS((void)random_isolated_free(0, 2, 1), precondition_error);
    CHECK_THROWS_AS((void)random_isolated_free(4, 0, 1), precondition_error);
}

// ---------------------------------------------------------------------------
// skeletons + random_gains
// ---------------------------------------------------------------------------

TEST_CASE("skeleton shapes") {
    const Skeleton p = path_skeleton(4);
    CHECK(p.n == 4);
    CHECK(p.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    const Skeleton c = cycle_skeleton(3);
    CHECK(c.edges.size() == 3);
    const Skeleton k = complete_bipartite_skeleton(2, 3);
    CHECK(k.n == 5);
    CHECK(k.edges.size() == 6);
    const Skeleton st = star_skeleton(4);
    CHECK(st.n == 5);
    CHECK(st.edges.size() == 4);
    CHECK_THROWS_AS((void)path_skeleton(0), precondition_error);
    CHECK_THROWS_AS((void)cycle_skeleton(2), precondition_error);
    CHECK_THROWS_AS((void)complete_bipartite_skeleton(0, 2), precondition_error);
    CHECK_THROWS_AS((void)star_skeleton(0), precondition_error);
}

TEST_CASE("random_gains dresses a skeleton with valid unit gains") {
    const GainGraph g = random_gains(complete_bipartite_skeleton(3, 3), 77);
    CHECK(g.edge_count() == 9);
    CHECK(validate(g.to_raw()).empty());
    int non_real = 0;
    for (const auto& e : g.edges()) {
        CHECK(is_unit(e.gain));
        if (e.gain != Q::one() && e.gain != -Q::one()) ++non_real;
    }
    CHECK(non_real > 0); // seeds overwhelmingly produce genuinely quaternionic gains
}

TEST_CASE("random_gains rejects malformed skeletons") {
    CHECK_THROWS_AS((void)random_gains({3, {{0, 0}}}, 1), precondition_error);
    CHECK_THROWS_AS((void)random_gains({3, {{0, 1}, {1, 0}}}, 1), precondition_error);
    CHECK_THROWS_AS((void)random_gains({3, {{0, 5}}}, 1), precondition_error);
}
