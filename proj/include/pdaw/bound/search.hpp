#pragma once

#include "pdaw/bound/theorem1.hpp"
#include "pdaw/core/star_pattern.hpp"

#include <cstdint>
#include <string_view>

namespace pdaw {

enum class SearchMode {
    exhaustive,  // every ordered K-tuple of (F-Z)-subsets
    canonical,   // one representative per isomorphism class of partial placements
};

std::string_view to_string(SearchMode m) noexcept;

struct SearchOptions {
    SearchMode mode = SearchMode::canonical;
    /// Placements (full or partial) examined before giving up.
    std::uint64_t node_budget = 100'000'000;
    /// Options for the inner ordering-bound evaluations.
    BoundOptions inner{};
};

struct SearchReport {
    std::size_t users = 0;  // K
    std::size_t rows = 0;   // F
    std::size_t stars = 0;  // Z
    SearchMode mode = SearchMode::canonical;
    std::size_t best_value = 0;
    StarPattern best_pattern;
    std::uint64_t nodes_explored = 0;
    std::uint64_t dedup_hits = 0;
    std::uint64_t pruned = 0;
    /// True when the search finished within budget, so best_value is the
    /// minimum over all placements.
    bool exhaustive = false;

    Rational rate_bound() const
    {
        return Rational(static_cast<long long>(best_value), static_cast<long long>(rows));
    }
};

/**
 * Minimum over placements (each user uncaches some (F-Z)-subset of the rows)
 * of the exact ordering bound.
 *
 * Canonical mode builds placements one user at a time. The first user is
 * fixed to rows {1..F-Z} (any placement is a row relabelling away from
 * that), and a partial placement whose canonical form was already seen at
 * the same size is skipped. A partial placement is also dropped once its own
 * bound reaches the incumbent: adding a user never lowers the maximum.
 */
SearchReport theorem3_search(std::size_t users, std::size_t rows, std::size_t stars,
                             const SearchOptions& options = {});

} // namespace pdaw
