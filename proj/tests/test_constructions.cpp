#include "fixtures.hpp"

#include "pdaw/combinatorics.hpp"
#include "pdaw/constructions.hpp"
#include "pdaw/core/canonical.hpp"
#include "pdaw/core/verify.hpp"
#include "pdaw/error.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace pdaw;

namespace {

std::size_t ipow(std::size_t b, int e)
{
    std::size_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

std::map<Symbol, std::size_t> multiplicities(const PdaGrid& g)
{
    std::map<Symbol, std::size_t> m;
    for (auto s : g.cells())
        if (s != kStar)
            ++m[s];
    return m;
}

} // namespace

TEST(Residue, Examples)
{
    EXPECT_EQ(residue_q(4, 3), 1);
    EXPECT_EQ(residue_q(6, 3), 3);
    EXPECT_EQ(residue_q(2, 5), 2);
    EXPECT_EQ(residue_q(0, 4), 4);
    EXPECT_EQ(residue_q(-1, 4), 3);
    EXPECT_EQ(residue_q(7, 1), 1);
    EXPECT_THROW(residue_q(3, 0), ParameterError);
    EXPECT_THROW(residue_q(3, -2), ParameterError);
}

TEST(Partition, Partition32Golden)
{
    const auto g = partition_pda({3, 2});
    EXPECT_EQ(g, fixtures::grid_from_labels(fixtures::kPartition32Labels));
    EXPECT_EQ(pda_params(g), (PdaParams{9, 9, 3, 18}));
}

TEST(Partition, RowLabelsQ3M2)
{
    const std::vector<std::vector<int>> want{{1, 1, 2}, {2, 1, 3}, {3, 1, 1}, {1, 2, 3}, {2, 2, 1},
                                             {3, 2, 2}, {1, 3, 1}, {2, 3, 2}, {3, 3, 3}};
    for (std::size_t r = 0; r < want.size(); ++r)
        EXPECT_EQ(partition_row_label({3, 2}, r), want[r]);
}

TEST(Partition, SmallAndMediumParams)
{
    EXPECT_EQ(pda_params(partition_pda({2, 1})), (PdaParams{4, 2, 1, 2}));
    const auto g = partition_pda({4, 3});
    EXPECT_TRUE(verify_pda(g).valid());
    EXPECT_EQ(pda_params(g), (PdaParams{16, 64, 16, 192}));
}

TEST(Partition, GridSweepIsValidWithStatedParams)
{
    for (int q = 2; q <= 5; ++q)
        for (int m = 1; m <= 5; ++m) {
            if (ipow(static_cast<std::size_t>(q), m) > kMaxRows)
                continue;
            const auto g = partition_pda({q, m});
            ASSERT_TRUE(verify_pda(g).valid()) << "q=" << q << " m=" << m;
            const PdaParams want{static_cast<std::size_t>((m + 1) * q), ipow(q, m), ipow(q, m - 1),
                                 static_cast<std::size_t>(q - 1) * ipow(q, m)};
            EXPECT_EQ(pda_params(g), want) << "q=" << q << " m=" << m;
            // Each symbol appears once per column group u.
            for (auto [s, n] : multiplicities(g))
                ASSERT_EQ(n, static_cast<std::size_t>(m + 1)) << "symbol " << s;
            // Column (u, v) stars exactly the rows with f_u = v.
            for (std::size_t r = 0; r < g.rows(); ++r) {
                const auto f = partition_row_label({q, m}, r);
                for (int u = 1; u <= m + 1; ++u)
                    for (int v = 1; v <= q; ++v)
                        ASSERT_EQ(g.is_star(r, static_cast<std::size_t>((u - 1) * q + v - 1)),
                                  f[static_cast<std::size_t>(u - 1)] == v);
            }
        }
}

TEST(Partition, RejectsBadParams)
{
    EXPECT_THROW(partition_pda({1, 2}), ParameterError);
    EXPECT_THROW(partition_pda({3, 0}), ParameterError);
    EXPECT_THROW(partition_pda({5, 6}), CapacityError);
}

TEST(Bipartite, Bipartite521Golden)
{
    const auto g = bipartite_pda({5, 2, 1, 1});
    EXPECT_EQ(g, fixtures::grid_from_labels(fixtures::kBipartite521Labels));
    EXPECT_EQ(pda_params(g), (PdaParams{10, 5, 2, 10}));
}

TEST(Bipartite, MnAndSmallCases)
{
    const auto g = bipartite_pda({4, 1, 2, 1});
    EXPECT_EQ(pda_params(g), (PdaParams{4, 6, 3, 4}));
    EXPECT_EQ(canonical_pattern(to_star_pattern(g)),
              canonical_pattern(to_star_pattern(fixtures::grid(fixtures::kMn42))));
    EXPECT_EQ(pda_params(bipartite_pda({3, 1, 1, 1})), (PdaParams{3, 3, 1, 3}));
}

TEST(Bipartite, GridSweepIsValid)
{
    using comb::binomial;
    for (int m = 3; m <= 7; ++m)
        for (int a = 1; a < m; ++a)
            for (int b = 1; a + b < m; ++b)
                for (int h = 1; h <= 3; ++h) {
                    const BipartiteSpec spec{m, a, b, h};
                    const auto g = h == 1 ? bipartite_pda(spec) : grouping_pda(spec);
                    ASSERT_TRUE(verify_pda(g).valid()) << m << a << b << h;
                    const auto um = static_cast<unsigned>(m);
                    const PdaParams want{h * binomial(um, a), binomial(um, b),
                                         binomial(um, b) - binomial(um - a, b), h * binomial(um, a + b)};
                    EXPECT_EQ(pda_params(g), want) << m << a << b << h;
                    for (auto [s, n] : multiplicities(g))
                        ASSERT_EQ(n, binomial(a + b, a));
                }
}

TEST(Bipartite, RejectsBadParams)
{
    EXPECT_THROW(bipartite_pda({4, 2, 2, 1}), ParameterError);
    EXPECT_THROW(bipartite_pda({4, 0, 2, 1}), ParameterError);
    EXPECT_THROW(bipartite_pda({5, 2, 1, 2}), ParameterError);
}

TEST(Mn, Params)
{
    EXPECT_EQ(pda_params(mn_pda(4, 2)), (PdaParams{4, 6, 3, 4}));
    EXPECT_EQ(pda_params(mn_pda(2, 1)), (PdaParams{2, 2, 1, 1}));
    EXPECT_EQ(pda_params(mn_pda(6, 2)), (PdaParams{6, 15, 5, 20}));
    EXPECT_TRUE(verify_pda(mn_pda(2, 1)).valid());
    EXPECT_TRUE(verify_pda(mn_pda(5, 4)).valid());
    EXPECT_THROW(mn_pda(3, 3), ParameterError);
    EXPECT_THROW(mn_pda(3, 0), ParameterError);
}

TEST(Grouping, Examples)
{
    EXPECT_EQ(pda_params(grouping_pda({5, 2, 1, 2})), (PdaParams{20, 5, 2, 20}));
    EXPECT_EQ(pda_params(grouping_pda({4, 1, 2, 3})), (PdaParams{12, 6, 3, 12}));
    EXPECT_EQ(pda_params(grouping_pda({4, 1, 2, 2})), (PdaParams{8, 6, 3, 8}));
    EXPECT_EQ(grouping_pda({5, 2, 1, 1}), bipartite_pda({5, 2, 1, 1}));
    // Copy i is the base array shifted by (i-1) C(m, a+b).
    const auto base = bipartite_pda({5, 2, 1, 1});
    const auto g = grouping_pda({5, 2, 1, 2});
    for (std::size_t r = 0; r < base.rows(); ++r)
        for (std::size_t c = 0; c < base.cols(); ++c) {
            EXPECT_EQ(g.at(r, c), base.at(r, c));
            EXPECT_EQ(g.at(r, c + 10), base.at(r, c) == kStar ? kStar : base.at(r, c) + 10);
        }
}
