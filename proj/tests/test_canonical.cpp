#include "fixtures.hpp"
#include "oracles.hpp"

#include "pdaw/constructions.hpp"
#include "pdaw/core/canonical.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace pdaw;

namespace {

std::vector<std::size_t> shuffled(std::size_t n, std::mt19937_64& rng)
{
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

std::vector<std::size_t> identity(std::size_t n)
{
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST(Canonical, InvariantUnderColumnShuffle)
{
    std::mt19937_64 rng(1);
    const auto p = to_star_pattern(fixtures::grid(fixtures::kPda64111));
    const auto c = canonical_pattern(p);
    for (int i = 0; i < 20; ++i)
        EXPECT_EQ(canonical_pattern(oracle::permuted(p, identity(p.rows()), shuffled(p.users(), rng))), c);
}

TEST(Canonical, InvariantUnderRowShuffle)
{
    std::mt19937_64 rng(2);
    const auto p = to_star_pattern(fixtures::grid(fixtures::kPda6855));
    const auto c = canonical_pattern(p);
    for (int i = 0; i < 20; ++i)
        EXPECT_EQ(canonical_pattern(oracle::permuted(p, shuffled(p.rows(), rng), identity(p.users()))), c);
}

TEST(Canonical, InvariantAndIdempotentOnRandomPatterns)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> rows(1, 8), users(1, 6);
        const std::size_t F = rows(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(0, F)(rng);
        const auto p = oracle::random_pattern(rng, users(rng), F, r);
        CanonicalStats stats;
        const auto c = canonical_pattern(p, &stats);
        EXPECT_TRUE(stats.exact);
        EXPECT_EQ(canonical_pattern(c), c);
        const auto q = oracle::permuted(p, shuffled(F, rng), shuffled(p.users(), rng));
        ASSERT_EQ(canonical_pattern(q), c) << "trial " << trial;
    }
}

TEST(Canonical, Mn42ListedSetsMatchMnPattern)
{
    const auto ex3 = to_star_pattern(fixtures::grid(fixtures::kMn42));
    const auto mn = to_star_pattern(mn_pda(4, 2));
    EXPECT_EQ(canonical_pattern(ex3), canonical_pattern(mn));
    EXPECT_EQ(canonical_pattern(fixtures::mn42_sets()), canonical_pattern(mn));
}

TEST(Canonical, DistinguishesNonIsomorphicPatterns)
{
    const auto a = StarPattern::from_one_based(4, {{1, 2}, {1, 2}});
    const auto b = StarPattern::from_one_based(4, {{1, 2}, {2, 3}});
    const auto c = StarPattern::from_one_based(4, {{1, 2}, {3, 4}});
    EXPECT_NE(canonical_pattern(a), canonical_pattern(b));
    EXPECT_NE(canonical_pattern(b), canonical_pattern(c));
    EXPECT_NE(canonical_pattern(a), canonical_pattern(c));
}

TEST(Canonical, LargePatternsUseTheHeuristicButStayIsomorphic)
{
    const auto p = to_star_pattern(partition_pda({2, 4}));
    CanonicalStats stats;
    const auto c = canonical_pattern(p, &stats);
    EXPECT_FALSE(stats.exact);
    EXPECT_EQ(c.users(), p.users());
    EXPECT_EQ(c.uncached_size(), p.uncached_size());
}
