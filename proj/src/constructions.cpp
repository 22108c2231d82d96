#include "pdaw/constructions.hpp"

#include "pdaw/combinatorics.hpp"
#include "pdaw/error.hpp"
#include "pdaw/row_set.hpp"

#include <map>
#include <string>

namespace pdaw {

std::int64_t residue_q(std::int64_t x, std::int64_t q)
{
    if (q <= 0)
        throw ParameterError("residue modulus must be positive, got " + std::to_string(q));
    const std::int64_t r = ((x % q) + q) % q;
    return r == 0 ? q : r;
}

namespace {

void check_partition(const PartitionSpec& s)
{
    if (s.q < 2)
        throw ParameterError("partition PDA needs q >= 2, got q=" + std::to_string(s.q));
    if (s.m < 1)
        throw ParameterError("partition PDA needs m >= 1, got m=" + std::to_string(s.m));
    const auto rows = comb::checked_pow(static_cast<std::uint64_t>(s.q), static_cast<unsigned>(s.m));
    if (rows > kMaxRows)
        throw CapacityError("partition PDA: F = q^m = " + std::to_string(rows) +
                            " exceeds PDAW_MAX_ROWS=" + std::to_string(kMaxRows));
}

void check_bipartite(const BipartiteSpec& s, bool allow_full)
{
    if (s.m < 1 || s.a < 1 || s.b < 1)
        throw ParameterError("bipartite PDA needs positive m, a, b");
    if (allow_full ? s.a + s.b > s.m : s.a + s.b >= s.m)
        throw ParameterError("bipartite PDA needs a + b < m, got a=" + std::to_string(s.a) +
                             " b=" + std::to_string(s.b) + " m=" + std::to_string(s.m));
    if (s.h < 1)
        throw ParameterError("group multiplicity h must be >= 1");
    const auto rows = comb::binomial(static_cast<unsigned>(s.m), static_cast<unsigned>(s.b));
    if (rows > kMaxRows)
        throw CapacityError("bipartite PDA: F = C(m,b) = " + std::to_string(rows) +
                            " exceeds PDAW_MAX_ROWS=" + std::to_string(kMaxRows));
}

PdaGrid bipartite_grid(const BipartiteSpec& s)
{
    const auto rows = comb::subsets_lex(s.m, s.b);
    const auto cols = comb::subsets_lex(s.m, s.a);
    std::vector<Symbol> cells;
    cells.reserve(rows.size() * cols.size());
    std::map<std::vector<int>, Symbol> ids;
    for (const auto& row : rows) {
        for (const auto& col : cols) {
            std::vector<int> merged;
            bool disjoint = true;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < col.size()) {
                if (j == col.size() || (i < row.size() && row[i] < col[j]))
                    merged.push_back(row[i++]);
                else if (i == row.size() || col[j] < row[i])
                    merged.push_back(col[j++]);
                else {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) {
                cells.push_back(kStar);
                continue;
            }
            auto [it, inserted] = ids.emplace(std::move(merged), static_cast<Symbol>(ids.size() + 1));
            cells.push_back(it->second);
        }
    }
    return PdaGrid(rows.size(), cols.size(), std::move(cells));
}

} // namespace

std::vector<int> partition_row_label(const PartitionSpec& spec, std::size_t row)
{
    std::vector<int> f(static_cast<std::size_t>(spec.m) + 1);
    std::int64_t sum = 0;
    for (int i = 0; i < spec.m; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<int>(row % static_cast<std::size_t>(spec.q)) + 1;
        row /= static_cast<std::size_t>(spec.q);
        sum += f[static_cast<std::size_t>(i)];
    }
    f.back() = static_cast<int>(residue_q(sum, spec.q));
    return f;
}

PdaGrid partition_pda(const PartitionSpec& spec)
{
    check_partition(spec);
    const std::size_t rows = comb::checked_pow(static_cast<std::uint64_t>(spec.q), static_cast<unsigned>(spec.m));
    const std::size_t cols = static_cast<std::size_t>(spec.m + 1) * static_cast<std::size_t>(spec.q);
    std::vector<Symbol> cells;
    cells.reserve(rows * cols);
    std::map<std::vector<int>, Symbol> ids;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto f = partition_row_label(spec, r);
        for (int u = 0; u <= spec.m; ++u) {
            for (int v = 1; v <= spec.q; ++v) {
                if (f[static_cast<std::size_t>(u)] == v) {
                    cells.push_back(kStar);
                    continue;
                }
                auto label = f;
                label[static_cast<std::size_t>(u)] = v;
                auto [it, inserted] = ids.emplace(std::move(label), static_cast<Symbol>(ids.size() + 1));
                cells.push_back(it->second);
            }
        }
    }
    return PdaGrid(rows, cols, std::move(cells));
}

PdaGrid bipartite_pda(const BipartiteSpec& spec)
{
    if (spec.h != 1)
        throw ParameterError("bipartite_pda takes h = 1; use grouping_pda for h > 1");
    check_bipartite(spec, false);
    return bipartite_grid(spec);
}

PdaGrid mn_pda(int users, int t)
{
    if (users < 2 || t < 1 || t >= users)
        throw ParameterError("MN PDA needs 1 <= t < K, got K=" + std::to_string(users) + " t=" + std::to_string(t));
    // t = K-1 gives a + b = m, which the bipartite rule still handles (S = 1).
    const BipartiteSpec spec{users, 1, t, 1};
    check_bipartite(spec, true);
    return bipartite_grid(spec);
}

PdaGrid grouping_pda(const BipartiteSpec& spec)
{
    check_bipartite(spec, false);
    const BipartiteSpec base{spec.m, spec.a, spec.b, 1};
    const PdaGrid copy = bipartite_grid(base);
    const auto shift = static_cast<Symbol>(
        comb::binomial(static_cast<unsigned>(spec.m), static_cast<unsigned>(spec.a + spec.b)));
    PdaGrid out = copy;
    for (int i = 1; i < spec.h; ++i)
        out = out.hconcat(copy, shift * i);
    return out;
}

} // namespace pdaw
