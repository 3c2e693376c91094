// Serial and OpenMP elimination kernels must agree bit-for-bit on ranks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgain/generate.hpp"
#include "qgain/graph.hpp"
#include "qgain/json_io.hpp"
#include "qgain/matrix.hpp"
#include "qgain/rng.hpp"

using namespace qgain;

namespace {

constexpr RankSide kSides[] = {RankSide::row_left, RankSide::row_right,
                               RankSide::col_left, RankSide::col_right};

QMatrix random_matrix(int rows, int cols, Seed seed) {
    Rng rng(seed);
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (rng.chance(1, 4)) continue; // keep some zeros
            m(r, c) = Quaternion(rng.small_rational(), rng.small_rational(),
                                 rng.small_rational(), rng.small_rational());
        }
    return m;
}

} // namespace

TEST_CASE("kernels agree on the two documented 2x2 examples") {
    const QMatrix a = parse_matrix(
        R"([[["1","0","0","1"],["0","1","1","0"]],[["0","-1","0","0"],["1","0","0","0"]]])");
    const QMatrix b = parse_matrix(
        R"([[["1","0","0","0"],["0","1","0","0"]],[["0","-1","0","0"],["1","0","0","0"]]])");
    for (RankSide side : kSides) {
        CHECK(rank_serial(a, side) == rank_parallel(a, side));
        CHECK(rank_serial(b, side) == rank_parallel(b, side));
    }
}

TEST_CASE("kernels agree on random rectangular matrices") {
    for (Seed s = 0; s < 200; ++s) {
        const int rows = 1 + static_cast<int>(s % 7);
        const int cols = 1 + static_cast<int>((s / 7) % 7);
        const QMatrix m = random_matrix(rows, cols, split_seed(301, s));
        const RankSide side = kSides[s % 4];
        CHECK(rank_serial(m, side) == rank_parallel(m, side));
    }
}

TEST_CASE("kernels agree on all four sides of graph adjacencies") {
    for (Seed s = 0; s < 100; ++s) {
        const int n = 1 + static_cast<int>(s % 10);
        const GainGraph g = random_graph(n, split_seed(302, s));
        const QMatrix adj = adjacency(g);
        int first = -1;
        for (RankSide side : kSides) {
            const int rs = rank_serial(adj, side);
            CHECK(rs == rank_parallel(adj, side));
            if (first < 0) first = rs;
            CHECK(rs == first); // Hermitian: all four ranks coincide
        }
    }
}
