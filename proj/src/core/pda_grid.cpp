#include "pdaw/core/pda_grid.hpp"

#include "pdaw/error.hpp"
#include "pdaw/row_set.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace pdaw {

PdaGrid::PdaGrid(std::size_t rows, std::size_t cols, std::vector<Symbol> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells))
{
    if (rows == 0 || cols == 0)
        throw StructuralError("grid must have at least one row and one column");
    if (rows > kMaxRows)
        throw CapacityError("F=" + std::to_string(rows) + " exceeds PDAW_MAX_ROWS=" + std::to_string(kMaxRows));
    if (cells_.size() != rows * cols)
        throw StructuralError("grid has " + std::to_string(cells_.size()) + " cells, expected " +
                              std::to_string(rows) + "x" + std::to_string(cols));
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] < 0)
            throw StructuralError("non-positive symbol id " + std::to_string(cells_[i]) + " at row " +
                                  std::to_string(i / cols + 1) + ", column " + std::to_string(i % cols + 1));
}

PdaGrid PdaGrid::from_rows(const std::vector<std::vector<Symbol>>& rows)
{
    if (rows.empty())
        throw StructuralError("grid has no rows");
    const std::size_t cols = rows.front().size();
    std::vector<Symbol> cells;
    cells.reserve(rows.size() * cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw StructuralError("ragged grid: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " cells, row 1 has " + std::to_string(cols));
        cells.insert(cells.end(), rows[r].begin(), rows[r].end());
    }
    return PdaGrid(rows.size(), cols, std::move(cells));
}

PdaGrid PdaGrid::all_stars(std::size_t rows, std::size_t cols)
{
    return PdaGrid(rows, cols, std::vector<Symbol>(rows * cols, kStar));
}

Symbol PdaGrid::max_symbol() const noexcept
{
    Symbol m = 0;
    for (auto c : cells_)
        m = std::max(m, c);
    return m;
}

std::size_t PdaGrid::distinct_symbols() const
{
    std::set<Symbol> seen;
    for (auto c : cells_)
        if (c != kStar)
            seen.insert(c);
    return seen.size();
}

std::size_t PdaGrid::stars_in_column(std::size_t col) const noexcept
{
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_; ++r)
        n += is_star(r, col) ? 1 : 0;
    return n;
}

PdaGrid PdaGrid::normalized() const
{
    std::map<Symbol, Symbol> relabel;
    for (auto c : cells_)
        if (c != kStar)
            relabel.emplace(c, 0);
    Symbol next = 1;
    for (auto& [from, to] : relabel)
        to = next++;
    PdaGrid out = *this;
    for (auto& c : out.cells_)
        if (c != kStar)
            c = relabel.at(c);
    return out;
}

PdaGrid PdaGrid::relabeled_by_first_appearance() const
{
    std::unordered_map<Symbol, Symbol> relabel;
    PdaGrid out = *this;
    for (auto& c : out.cells_) {
        if (c == kStar)
            continue;
        auto [it, inserted] = relabel.emplace(c, static_cast<Symbol>(relabel.size() + 1));
        c = it->second;
    }
    return out;
}

PdaGrid PdaGrid::hconcat(const PdaGrid& right, Symbol right_shift) const
{
    if (right.rows_ != rows_)
        throw StructuralError("hconcat: row counts differ");
    std::vector<Symbol> cells;
    cells.reserve(rows_ * (cols_ + right.cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            cells.push_back(at(r, c));
        for (std::size_t c = 0; c < right.cols_; ++c) {
            const Symbol s = right.at(r, c);
            cells.push_back(s == kStar ? kStar : s + right_shift);
        }
    }
    return PdaGrid(rows_, cols_ + right.cols_, std::move(cells));
}

} // namespace pdaw
