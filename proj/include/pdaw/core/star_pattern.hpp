#pragma once

#include "pdaw/core/pda_grid.hpp"
#include "pdaw/row_set.hpp"

#include <cstddef>
#include <vector>

namespace pdaw {

/**
 * The placement of a PDA: for every user k the set A_k of rows it does not
 * cache. All A_k have the same size F - Z. Users and rows are 0-based here;
 * text formats and reports use 1-based numbering.
 */
class StarPattern {
public:
    StarPattern() = default;
    /// Throws StructuralError when the sets disagree on the universe or size.
    StarPattern(std::size_t rows, std::vector<RowSet> uncached);

    /// Builds from 1-based row lists, one per user.
    static StarPattern from_one_based(std::size_t rows, const std::vector<std::vector<int>>& uncached);

    std::size_t users() const noexcept { return uncached_.size(); }
    std::size_t rows() const noexcept { return rows_; }
    /// F - Z.
    std::size_t uncached_size() const noexcept { return uncached_size_; }
    /// Z.
    std::size_t stars_per_user() const noexcept { return rows_ - uncached_size_; }

    const RowSet& uncached(std::size_t user) const { return uncached_.at(user); }
    RowSet cached(std::size_t user) const { return uncached_.at(user).complement(); }
    const std::vector<RowSet>& uncached_sets() const noexcept { return uncached_; }

    bool is_star(std::size_t row, std::size_t user) const { return !uncached_.at(user).test(row); }

    friend bool operator==(const StarPattern&, const StarPattern&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t uncached_size_ = 0;
    std::vector<RowSet> uncached_;
};

/// A_k = rows of column k holding symbols. Throws StructuralError if the
/// columns do not all carry the same number of stars.
StarPattern to_star_pattern(const PdaGrid& grid);

} // namespace pdaw
