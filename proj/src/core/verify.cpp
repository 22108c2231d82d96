#include "pdaw/core/verify.hpp"

#include "pdaw/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pdaw {

std::string_view to_string(Axiom a) noexcept
{
    switch (a) {
    case Axiom::C1: return "C1";
    case Axiom::C2: return "C2";
    case Axiom::C3a: return "C3a";
    case Axiom::C3b: return "C3b";
    }
    return "?";
}

namespace {

std::string cell_name(CellRef c)
{
    return "(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")";
}

void check_star_counts(const PdaGrid& grid, std::vector<Violation>& out)
{
    std::vector<std::size_t> counts(grid.cols());
    std::map<std::size_t, std::size_t> freq;
    for (std::size_t k = 0; k < grid.cols(); ++k)
        ++freq[counts[k] = grid.stars_in_column(k)];
    if (freq.size() <= 1)
        return;
    // Reference count: the most frequent one, smallest on ties.
    std::size_t ref = freq.begin()->first;
    for (auto [count, n] : freq)
        if (n > freq[ref])
            ref = count;
    for (std::size_t k = 0; k < grid.cols(); ++k) {
        if (counts[k] == ref)
            continue;
        Violation v{Axiom::C1, kStar, {}, {}};
        for (std::size_t j = 0; j < grid.rows(); ++j)
            if (grid.is_star(j, k))
                v.cells.push_back({j, k});
        v.detail = "column " + std::to_string(k + 1) + " has " + std::to_string(counts[k]) + " stars, expected " +
                   std::to_string(ref);
        out.push_back(std::move(v));
    }
}

void check_pair(const PdaGrid& grid, Symbol s, CellRef a, CellRef b, std::vector<Violation>& out)
{
    if (b < a)
        std::swap(a, b);
    if (a.row == b.row || a.col == b.col) {
        out.push_back({Axiom::C3a, s, {a, b},
                       "symbol " + std::to_string(s) + " repeats in " + (a.row == b.row ? "row " : "column ") +
                           std::to_string((a.row == b.row ? a.row : a.col) + 1) + " at " + cell_name(a) + " and " +
                           cell_name(b)});
        return;
    }
    std::vector<CellRef> cross{{a.row, b.col}, {b.row, a.col}};
    std::sort(cross.begin(), cross.end());
    Violation v{Axiom::C3b, s, {a, b}, {}};
    for (auto c : cross)
        if (!grid.is_star(c.row, c.col))
            v.cells.push_back(c);
    if (v.cells.size() == 2)
        return;
    v.detail = "symbol " + std::to_string(s) + " at " + cell_name(a) + " and " + cell_name(b) +
               " has a non-star cross cell";
    out.push_back(std::move(v));
}

} // namespace

VerifyResult verify_pda(const PdaGrid& grid)
{
    VerifyResult result;
    check_star_counts(grid, result.violations);

    const Symbol max_id = grid.max_symbol();
    std::vector<std::vector<CellRef>> buckets(static_cast<std::size_t>(max_id) + 1);
    for (std::size_t j = 0; j < grid.rows(); ++j)
        for (std::size_t k = 0; k < grid.cols(); ++k)
            if (const Symbol s = grid.at(j, k); s != kStar)
                buckets[static_cast<std::size_t>(s)].push_back({j, k});

    for (Symbol s = 1; s <= max_id; ++s) {
        const auto& cells = buckets[static_cast<std::size_t>(s)];
        if (cells.empty()) {
            result.violations.push_back(
                {Axiom::C2, s, {}, "symbol " + std::to_string(s) + " does not occur (S=" + std::to_string(max_id) + ")"});
            continue;
        }
        for (std::size_t x = 0; x < cells.size(); ++x)
            for (std::size_t y = x + 1; y < cells.size(); ++y)
                check_pair(grid, s, cells[x], cells[y], result.violations);
    }
    std::sort(result.violations.begin(), result.violations.end());
    return result;
}

PdaParams pda_params(const PdaGrid& grid)
{
    const std::size_t z = grid.stars_in_column(0);
    for (std::size_t k = 1; k < grid.cols(); ++k) {
        const std::size_t zk = grid.stars_in_column(k);
        if (zk != z)
            throw ParameterError("star counts differ: column 1 has " + std::to_string(z) + ", column " +
                                 std::to_string(k + 1) + " has " + std::to_string(zk));
    }
    return PdaParams{grid.cols(), grid.rows(), z, static_cast<std::size_t>(grid.max_symbol())};
}

} // namespace pdaw
