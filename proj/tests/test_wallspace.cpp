#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vcs;

namespace {

std::size_t maximal_cubes_at(const CubeComplex& c, std::size_t v, std::size_t dim) {
    std::size_t n = 0;
    for (const auto& cube : c.maximal_cubes())
        if (cube.dim == dim && std::find(cube.corners.begin(), cube.corners.end(), v) != cube.corners.end()) ++n;
    return n;
}

}  // namespace

TEST(Walls, Crossing) {
    const Wallspace grid = oracle::cube_wallspace(2);
    EXPECT_TRUE(walls_cross(grid.walls[0], grid.walls[1]));
    EXPECT_FALSE(walls_cross(grid.walls[0], grid.walls[0]));
    const Wallspace nested = parse_wallspace(oracle::catalog_text("wallspaces/nested.ws"));
    EXPECT_FALSE(walls_cross(nested.walls[0], nested.walls[1]));
    EXPECT_EQ(max_crossing_family(nested).size, 1U);
}

TEST(Walls, Validation) {
    EXPECT_THROW(parse_wallspace("chambers 2\nwall a U=0,1 V=1\n"), Error);  // U is everything
    EXPECT_THROW(parse_wallspace("chambers 3\nwall a U=0 V=1\n"), Error);    // chamber 2 uncovered
    EXPECT_THROW(parse_wallspace("chambers 2\nwall a U=0 V=1\nwall a U=1 V=0\n"), Error);
    EXPECT_THROW(parse_wallspace("chambers 2\nwall a U=0 V=5\n"), Error);
    EXPECT_THROW(parse_wallspace("wall a U=0 V=1\n"), Error);
    EXPECT_THROW(parse_wallspace("chambers 2\nwall a X=0 V=1\n"), Error);
}

TEST(Walls, RoundTrip) {
    const Wallspace ws = parse_wallspace(oracle::catalog_text("wallspaces/two_crossing.ws"));
    EXPECT_EQ(serialize_wallspace(parse_wallspace(serialize_wallspace(ws))), serialize_wallspace(ws));
}

TEST(Dual, SingleWall) {
    const auto d = dual_cube_complex(oracle::cube_wallspace(1));
    EXPECT_EQ(d.complex.vertex_count(), 2U);
    EXPECT_EQ(d.complex.count_of_dim(1), 1U);
}

TEST(Dual, KCube) {
    for (std::size_t k = 1; k <= 5; ++k) {
        const Wallspace ws = oracle::cube_wallspace(k);
        EXPECT_EQ(oracle::all_consistent(ws).size(), std::size_t{1} << k);
        const auto d = dual_cube_complex(ws);
        EXPECT_EQ(d.complex.vertex_count(), std::size_t{1} << k);
        EXPECT_EQ(d.complex.count_of_dim(1), k << (k - 1));
        const auto maximal = d.complex.maximal_cubes();
        ASSERT_EQ(maximal.size(), 1U);
        EXPECT_EQ(maximal[0].dim, k);
        EXPECT_EQ(dimension(d.complex), k);
        EXPECT_EQ(max_crossing_family(ws).size, k);
    }
}

TEST(Dual, OrientationsMatchBruteForce) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Wallspace ws = oracle::random_wallspace(rng);
        const auto d = dual_cube_complex(ws);
        const auto brute = oracle::all_consistent(ws);
        std::set<Orientation> got(d.orientations.begin(), d.orientations.end());
        ASSERT_EQ(got, std::set<Orientation>(brute.begin(), brute.end())) << "trial " << trial;
        // edges differ in exactly one wall
        for (std::size_t e = 0; e < d.complex.edges().size(); ++e) {
            const auto [a, b] = d.complex.edges()[e];
            std::size_t diff = 0;
            for (std::size_t w = 0; w < ws.walls.size(); ++w) diff += d.orientations[a][w] != d.orientations[b][w];
            ASSERT_EQ(diff, 1U);
            ASSERT_NE(d.orientations[a][d.wall_of_edge[e]], d.orientations[b][d.wall_of_edge[e]]);
        }
        ASSERT_EQ(dimension(d.complex), max_crossing_family(ws).size) << "trial " << trial;
        if (dimension(d.complex) <= 4) {
            ASSERT_TRUE(check_npc(d.complex).npc()) << "trial " << trial;
        }
        ASSERT_TRUE(specialness_report(d.complex).special) << "trial " << trial;
    }
}

TEST(Dual, MediansAreVertices) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const Wallspace ws = oracle::random_wallspace(rng);
        const auto d = dual_cube_complex(ws);
        const auto& o = d.orientations;
        for (std::size_t a = 0; a < o.size(); ++a)
            for (std::size_t b = a; b < o.size(); ++b)
                for (std::size_t c = b; c < o.size(); ++c)
                    ASSERT_TRUE(oracle::consistent(ws, median_orientation(o[a], o[b], o[c])));
    }
}

TEST(Dual, Budget) {
    const Wallspace ws = oracle::cube_wallspace(5);
    try {
        dual_cube_complex(ws, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
}

TEST(Torus, OneSlope) {
    const Wallspace ws = torus_line_wallspace({{1, 0}}, 1);
    EXPECT_EQ(ws.walls.size(), 3U);
    EXPECT_EQ(ws.chambers, 4U);
    const auto d = dual_cube_complex(ws);
    EXPECT_EQ(d.complex.vertex_count(), 4U);
    EXPECT_EQ(d.complex.count_of_dim(1), 3U);
    EXPECT_EQ(dimension(d.complex), 1U);
}

TEST(Torus, TwoSlopesGiveGrid) {
    const Wallspace ws = torus_line_wallspace({{1, 0}, {0, 1}}, 1);
    EXPECT_EQ(ws.chambers, 16U);
    const auto d = dual_cube_complex(ws);
    EXPECT_EQ(d.complex.count_of_dim(2), 9U);
    EXPECT_EQ(hyperplanes(d.complex).size(), 6U);
    EXPECT_EQ(max_crossing_family(ws).size, 2U);
}

TEST(Torus, DimensionEqualsSlopeCount) {
    const std::vector<std::vector<Slope>> families{
        {{1, 0}}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}, {1, 1}}, {{1, 2}, {2, -1}}, {{1, 0}, {1, 1}, {1, -1}}};
    for (const auto& slopes : families)
        for (int w = 1; w <= 2; ++w) {
            const Wallspace ws = torus_line_wallspace(slopes, w);
            EXPECT_EQ(ws.walls.size(), slopes.size() * static_cast<std::size_t>(2 * w + 1));
            const auto d = dual_cube_complex(ws);
            const std::size_t n = slopes.size();
            EXPECT_EQ(dimension(d.complex), n);
            EXPECT_TRUE(check_npc(d.complex).npc());
            std::size_t interior = 0;
            for (std::size_t v = 0; v < d.complex.vertex_count(); ++v) {
                if (d.complex.degree(v) != 2 * n) continue;
                ++interior;
                EXPECT_EQ(maximal_cubes_at(d.complex, v, n), std::size_t{1} << n);
            }
            EXPECT_GT(interior, 0U);
        }
}

TEST(Torus, Errors) {
    EXPECT_THROW(torus_line_wallspace({}, 1), Error);
    EXPECT_THROW(torus_line_wallspace({{1, 0}}, 0), Error);
    EXPECT_THROW(torus_line_wallspace({{1, 0}, {1, 0}}, 1), Error);
    EXPECT_THROW(torus_line_wallspace({{-1, 0}}, 1), Error);
}

TEST(Torus, WallIds) {
    const Wallspace ws = torus_line_wallspace({{1, 0}}, 1);
    EXPECT_EQ(ws.walls[0].id, "s0_m1");
    EXPECT_EQ(ws.walls[1].id, "s0_0");
    EXPECT_EQ(ws.walls[2].id, "s0_1");
}
