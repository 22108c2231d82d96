#include "fixtures.hpp"
#include "oracles.hpp"

#include "pdaw/bound/theorem1.hpp"
#include "pdaw/core/verify.hpp"
#include "pdaw/filler.hpp"

#include <gtest/gtest.h>

using namespace pdaw;

TEST(ConflictGraph, VertexCounts)
{
    EXPECT_EQ(build_conflict_graph(fixtures::mn42_sets()).vertex_count(), 12u);
    EXPECT_EQ(build_conflict_graph(to_star_pattern(PdaGrid::all_stars(3, 3))).vertex_count(), 0u);
    const auto g = build_conflict_graph(to_star_pattern(fixtures::grid(fixtures::kPda6424)));
    EXPECT_EQ(g.vertex_count(), 12u);
    // Row-major vertex order.
    EXPECT_EQ(g.cell(0).row, 0u);
    EXPECT_EQ(g.cell(0).col, 3u);
}

TEST(ConflictGraph, EdgeRule)
{
    // A_1 = {1}, A_2 = {2}: the cells (1,1) and (2,2) have starred crosses.
    const auto p = StarPattern::from_one_based(2, {{1}, {2}});
    const auto g = build_conflict_graph(p);
    ASSERT_EQ(g.vertex_count(), 2u);
    EXPECT_FALSE(g.adjacent(0, 1));
    const auto q = StarPattern::from_one_based(2, {{1}, {1}});
    EXPECT_TRUE(build_conflict_graph(q).adjacent(0, 1));
}

TEST(FillGreedy, Examples)
{
    const auto g = fill_greedy(fixtures::mn42_sets(), VertexOrder::degree_desc);
    EXPECT_TRUE(verify_pda(g).valid());
    EXPECT_GE(pda_params(g).symbols, 4u);
    EXPECT_LE(pda_params(g).symbols, 6u);
    EXPECT_EQ(pda_params(fill_greedy(to_star_pattern(PdaGrid::all_stars(2, 2)))).symbols, 0u);
    const auto s3 = fill_greedy(to_star_pattern(fixtures::grid(fixtures::kPda64111)), VertexOrder::row_major);
    EXPECT_TRUE(verify_pda(s3).valid());
    EXPECT_GE(pda_params(s3).symbols, 11u);
}

TEST(FillExact, WorkedExamples)
{
    const auto a = fill_exact(fixtures::mn42_sets());
    EXPECT_EQ(a.symbols, 4u);
    EXPECT_TRUE(a.optimal);
    EXPECT_TRUE(verify_pda(a.grid).valid());

    const auto ex4 = to_star_pattern(fixtures::grid(fixtures::kPda6855));
    const auto b = fill_exact(ex4);
    EXPECT_EQ(b.symbols, 5u);
    EXPECT_TRUE(b.optimal);
    EXPECT_TRUE(verify_pda(b.grid).valid());

    const auto c = fill_exact(StarPattern::from_one_based(2, {{1}, {2}}));
    EXPECT_EQ(c.symbols, 1u);

    const auto eq3 = fill_exact(to_star_pattern(fixtures::grid(fixtures::kPda6424)));
    EXPECT_EQ(eq3.symbols, 4u);

    const auto s3 = fill_exact(to_star_pattern(fixtures::grid(fixtures::kPda64111)));
    EXPECT_EQ(s3.symbols, 11u);
    EXPECT_EQ(s3.theorem1_bound, 11u);
}

TEST(FillExact, SandwichOnRandomPatterns)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t K = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        const std::size_t F = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(0, F)(rng);
        const auto p = oracle::random_pattern(rng, K, F, r);
        const auto e = fill_exact(p);
        ASSERT_TRUE(verify_pda(e.grid).valid());
        ASSERT_EQ(to_star_pattern(e.grid), p);
        EXPECT_LE(theorem1_exact(p).value, e.symbols);
        for (auto order : {VertexOrder::row_major, VertexOrder::degree_desc}) {
            const auto g = fill_greedy(p, order);
            ASSERT_TRUE(verify_pda(g).valid());
            EXPECT_LE(e.symbols, pda_params(g).symbols);
        }
    }
}
