#pragma once

#include "pdaw/core/star_pattern.hpp"

#include <cstddef>

namespace pdaw {

/// Row counts up to this use the exact search.
inline constexpr std::size_t kCanonicalExactRows = 10;

struct CanonicalStats {
    bool exact = true;
    std::size_t orderings_scanned = 0;
};

/**
 * A representative of the pattern's class under user (column) and row
 * permutations.
 *
 * Rows and columns are first colour-refined (each colour is replaced by the
 * sorted colours of its neighbours until the partition is stable); rows are
 * then laid out class by class. For F <= kCanonicalExactRows every ordering
 * inside the classes is scanned and the one whose sorted column bitmasks are
 * lexicographically smallest wins, which makes the form exact. Larger F
 * individualises one row at a time, keeping the locally smallest choice; that
 * path is a heuristic and reports exact = false.
 */
StarPattern canonical_pattern(const StarPattern& pattern, CanonicalStats* stats = nullptr);

} // namespace pdaw
