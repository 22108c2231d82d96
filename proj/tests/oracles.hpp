#pragma once

// Slow, obviously-correct reference computations used to check the library.
// Nothing here shares code with the implementations under test beyond the
// plain data types.

#include "pdaw/core/pda_grid.hpp"
#include "pdaw/core/star_pattern.hpp"
#include "pdaw/core/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using pdaw::CellRef;
using pdaw::PdaGrid;
using pdaw::StarPattern;

/// Pairwise C3 check over every pair of cells, O((FK)^2). Produces the same
/// violation records as verify_pda for C3a and C3b.
inline std::vector<pdaw::Violation> c3_pairwise(const PdaGrid& g)
{
    std::vector<pdaw::Violation> out;
    const std::size_t n = g.rows() * g.cols();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const CellRef a{x / g.cols(), x % g.cols()};
            const CellRef b{y / g.cols(), y % g.cols()};
            const auto s = g.at(a.row, a.col);
            if (s == pdaw::kStar || s != g.at(b.row, b.col))
                continue;
            if (a.row == b.row || a.col == b.col) {
                out.push_back({pdaw::Axiom::C3a, s, {a, b}, {}});
                continue;
            }
            std::vector<CellRef> cells{a, b};
            const CellRef c1{a.row, b.col}, c2{b.row, a.col};
            for (const auto& c : {c1, c2})
                if (!g.is_star(c.row, c.col))
                    cells.push_back(c);
            if (cells.size() > 2) {
                std::sort(cells.begin() + 2, cells.end());
                out.push_back({pdaw::Axiom::C3b, s, cells, {}});
            }
        }
    return out;
}

/// Rows of a pattern as std::set for the permutation oracle.
inline std::vector<std::set<std::size_t>> as_sets(const StarPattern& p)
{
    std::vector<std::set<std::size_t>> out;
    for (const auto& s : p.uncached_sets()) {
        auto m = s.members();
        out.emplace_back(m.begin(), m.end());
    }
    return out;
}

inline std::size_t ordering_value(const std::vector<std::set<std::size_t>>& sets, const std::vector<std::size_t>& order)
{
    if (order.empty())
        return 0;
    std::set<std::size_t> cur = sets[order[0]];
    std::size_t sum = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
        if (h > 0) {
            std::set<std::size_t> next;
            std::set_intersection(cur.begin(), cur.end(), sets[order[h]].begin(), sets[order[h]].end(),
                                  std::inserter(next, next.end()));
            cur = std::move(next);
        }
        sum += cur.size();
    }
    return sum;
}

/// Max over all K! orderings, plus the lexicographically first ordering
/// attaining it.
inline std::pair<std::size_t, std::vector<std::size_t>> permutation_max(const StarPattern& p)
{
    const auto sets = as_sets(p);
    std::vector<std::size_t> perm(p.users());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t best = 0;
    std::vector<std::size_t> arg = perm;
    bool first = true;
    do {
        const auto v = ordering_value(sets, perm);
        if (first || v > best) {
            best = v;
            arg = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, arg};
}

/// A random placement: every user uncaches a uniformly random r-subset.
inline StarPattern random_pattern(std::mt19937_64& rng, std::size_t users, std::size_t rows, std::size_t r)
{
    std::vector<pdaw::RowSet> sets;
    std::vector<std::size_t> idx(rows);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t k = 0; k < users; ++k) {
        std::shuffle(idx.begin(), idx.end(), rng);
        pdaw::RowSet s(rows);
        for (std::size_t i = 0; i < r; ++i)
            s.set(idx[i]);
        sets.push_back(s);
    }
    return StarPattern(rows, std::move(sets));
}

/// A random small grid: each cell a star with probability p_star, else a
/// symbol from [1, max_symbol]. Not a PDA in general.
inline PdaGrid random_grid(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double p_star, int max_symbol)
{
    std::bernoulli_distribution star(p_star);
    std::uniform_int_distribution<int> sym(1, max_symbol);
    std::vector<pdaw::Symbol> cells(rows * cols);
    for (auto& c : cells)
        c = star(rng) ? pdaw::kStar : sym(rng);
    return PdaGrid(rows, cols, std::move(cells));
}

/// |C_v| by listing every tail in [q-1]^(m-1).
inline std::vector<long long> residue_buckets(int q, int m)
{
    std::vector<long long> out(static_cast<std::size_t>(q), 0);
    std::vector<int> tail(static_cast<std::size_t>(m - 1), 1);
    for (;;) {
        long long s = 0;
        for (int f : tail)
            s += f;
        const long long r = s % q == 0 ? q : s % q;
        ++out[static_cast<std::size_t>(r - 1)];
        std::size_t i = 0;
        while (i < tail.size() && ++tail[i] == q)
            tail[i++] = 1;
        if (i == tail.size())
            break;
    }
    return out;
}

/// |{f in F_{f_2..f_m} : f_{m+1} not in residues}| by listing the q-1
/// vectors (i, f_2, ..., f_m, <i + f_2 + ... + f_m>_q).
inline int lemma3_set_count(int q, const std::vector<int>& residues, const std::vector<int>& tail)
{
    int count = 0;
    for (int i = 1; i <= q - 1; ++i) {
        std::vector<int> f{i};
        f.insert(f.end(), tail.begin(), tail.end());
        long long s = 0;
        for (int x : f)
            s += x;
        f.push_back(static_cast<int>(s % q == 0 ? q : s % q));
        if (std::find(residues.begin(), residues.end(), f.back()) == residues.end())
            ++count;
    }
    return count;
}

/// Row/column permuted copy of a pattern.
inline StarPattern permuted(const StarPattern& p, const std::vector<std::size_t>& row_perm,
                            const std::vector<std::size_t>& user_perm)
{
    std::vector<pdaw::RowSet> sets(p.users(), pdaw::RowSet(p.rows()));
    for (std::size_t k = 0; k < p.users(); ++k)
        for (auto j : p.uncached(k).members())
            sets[user_perm[k]].set(row_perm[j]);
    return StarPattern(p.rows(), std::move(sets));
}

} // namespace oracle
