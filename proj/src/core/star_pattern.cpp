#include "pdaw/core/star_pattern.hpp"

#include "pdaw/error.hpp"

#include <string>

namespace pdaw {

StarPattern::StarPattern(std::size_t rows, std::vector<RowSet> uncached) : rows_(rows), uncached_(std::move(uncached))
{
    if (rows_ == 0)
        throw StructuralError("placement needs at least one row");
    if (uncached_.empty())
        throw StructuralError("placement needs at least one user");
    uncached_size_ = uncached_.front().universe() == rows_ ? uncached_.front().count() : 0;
    for (std::size_t k = 0; k < uncached_.size(); ++k) {
        if (uncached_[k].universe() != rows_)
            throw StructuralError("user " + std::to_string(k + 1) + " has a row set over a universe of " +
                                  std::to_string(uncached_[k].universe()) + ", expected " + std::to_string(rows_));
        const auto size = uncached_[k].count();
        if (size != uncached_size_)
            throw StructuralError("user " + std::to_string(k + 1) + " leaves " + std::to_string(size) +
                                  " rows uncached, user 1 leaves " + std::to_string(uncached_size_));
    }
}

StarPattern StarPattern::from_one_based(std::size_t rows, const std::vector<std::vector<int>>& uncached)
{
    std::vector<RowSet> sets;
    sets.reserve(uncached.size());
    for (const auto& rs : uncached)
        sets.push_back(RowSet::from_one_based(rows, rs));
    return StarPattern(rows, std::move(sets));
}

StarPattern to_star_pattern(const PdaGrid& grid)
{
    std::vector<RowSet> sets;
    sets.reserve(grid.cols());
    for (std::size_t k = 0; k < grid.cols(); ++k) {
        RowSet s(grid.rows());
        for (std::size_t j = 0; j < grid.rows(); ++j)
            if (!grid.is_star(j, k))
                s.set(j);
        sets.push_back(std::move(s));
    }
    return StarPattern(grid.rows(), std::move(sets));
}

} // namespace pdaw
