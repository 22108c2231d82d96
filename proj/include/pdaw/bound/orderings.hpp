#pragma once

#include "pdaw/bound/theorem1.hpp"

namespace pdaw {

/**
 * Ordering for the partition PDA's users (column ids as in partition_pda):
 * (1,q), (2,q), ..., (m,q); then (m+1, v) for every v, largest |C_v| first
 * and ties by smaller v; then all remaining users in column order.
 */
UserOrdering partition_ordering(int q, int m);

/**
 * Ordering for the bipartite PDA's users (a-subsets in lex order). Users are
 * grouped by their largest element g = a..m; group g lists the sets [g] \ J
 * for the (g-a)-subsets J of [g-1], J in lex order. For g = a that is [a].
 */
UserOrdering bipartite_ordering(int m, int a, int b);

/// bipartite_ordering with each user replaced by its h copies, copy 1 first.
UserOrdering grouping_ordering(int m, int a, int b, int h);

} // namespace pdaw
