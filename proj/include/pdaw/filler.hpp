#pragma once

// Symbol assignment for a given star pattern as proper colouring of the
// conflict graph on its non-star cells.

#include "pdaw/core/pda_grid.hpp"
#include "pdaw/core/star_pattern.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace pdaw {

/**
 * Vertices are the non-star cells in row-major order. Two cells conflict
 * (may not share a symbol) when they share a row or a column, or when one of
 * their two cross cells is not a star.
 */
class ConflictGraph {
public:
    explicit ConflictGraph(const StarPattern& pattern);

    std::size_t vertex_count() const noexcept { return cells_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }
    const CellRef& cell(std::size_t v) const { return cells_.at(v); }
    bool adjacent(std::size_t u, std::size_t v) const
    {
        return (adj_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }
    std::size_t degree(std::size_t v) const;
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::size_t edges_ = 0;
    std::vector<CellRef> cells_;
    std::vector<std::uint64_t> adj_;
};

ConflictGraph build_conflict_graph(const StarPattern& pattern);

enum class VertexOrder { row_major, degree_desc };

std::string_view to_string(VertexOrder o) noexcept;

/// Smallest-free-colour greedy in the given order (degree ties by row-major
/// position). The grid's symbols are numbered by first appearance.
PdaGrid fill_greedy(const StarPattern& pattern, VertexOrder order = VertexOrder::degree_desc);

struct FillResult {
    PdaGrid grid;
    std::size_t symbols = 0;
    /// max(greedy clique size, exact ordering bound); S can never go below it.
    std::size_t lower_bound = 0;
    std::size_t clique_bound = 0;
    std::size_t theorem1_bound = 0;
    /// True when the search finished, so `symbols` is the minimum.
    bool optimal = false;
    std::uint64_t nodes = 0;
};

/// DSATUR branch-and-bound colouring, seeded with the better greedy fill.
FillResult fill_exact(const StarPattern& pattern, std::uint64_t node_budget = 10'000'000);

} // namespace pdaw
