#pragma once

#include "pdaw/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pdaw {

/// Cell content: kStar, or a positive symbol id.
using Symbol = std::int32_t;
inline constexpr Symbol kStar = 0;

/// (K, F, Z, S) with derived rate S/F and memory ratio Z/F.
struct PdaParams {
    std::size_t users = 0;     // K
    std::size_t rows = 0;      // F
    std::size_t stars = 0;     // Z, per column
    std::size_t symbols = 0;   // S

    Rational rate() const { return Rational(static_cast<long long>(symbols), static_cast<long long>(rows)); }
    Rational memory_ratio() const
    {
        return Rational(static_cast<long long>(stars), static_cast<long long>(rows));
    }

    friend bool operator==(const PdaParams&, const PdaParams&) = default;
};

/// 0-based (row, column) coordinates of a cell.
struct CellRef {
    std::size_t row = 0;
    std::size_t col = 0;

    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/**
 * An F x K array of stars and positive symbol ids, stored row-major.
 * Construction checks only the structure (shape, positive ids, F cap);
 * the placement-delivery axioms are checked by verify_pda().
 */
class PdaGrid {
public:
    PdaGrid() = default;
    PdaGrid(std::size_t rows, std::size_t cols, std::vector<Symbol> cells);

    /// Builds from nested rows; throws StructuralError on ragged input.
    static PdaGrid from_rows(const std::vector<std::vector<Symbol>>& rows);
    /// An all-star F x K grid (every user caches everything).
    static PdaGrid all_stars(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Symbol at(std::size_t row, std::size_t col) const noexcept { return cells_[row * cols_ + col]; }
    bool is_star(std::size_t row, std::size_t col) const noexcept { return at(row, col) == kStar; }
    const std::vector<Symbol>& cells() const noexcept { return cells_; }

    /// Largest symbol id present (0 for an all-star grid).
    Symbol max_symbol() const noexcept;
    std::size_t distinct_symbols() const;
    std::size_t stars_in_column(std::size_t col) const noexcept;

    /// Relabels symbols to 1..S preserving their relative order, closing any
    /// gaps. Identity when the ids already form exactly [S].
    PdaGrid normalized() const;

    /// Relabels symbols to 1..S in order of first appearance in a row-major scan.
    PdaGrid relabeled_by_first_appearance() const;

    /// Side-by-side concatenation; both grids must have the same row count.
    PdaGrid hconcat(const PdaGrid& right, Symbol right_shift) const;

    friend bool operator==(const PdaGrid&, const PdaGrid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> cells_;
};

} // namespace pdaw
