#pragma once

#include "pdaw/core/star_pattern.hpp"
#include "pdaw/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace pdaw {

/// A sequence of distinct users, 0-based.
struct UserOrdering {
    std::vector<std::size_t> users;

    static UserOrdering from_one_based(const std::vector<int>& users);
    std::vector<int> one_based() const;

    friend bool operator==(const UserOrdering&, const UserOrdering&) = default;
};

enum class BoundMethod {
    exact,         // full enumeration of all K! orderings
    branch_bound,  // depth-first branch-and-bound over orderings
    greedy,        // largest next intersection, smallest id on ties
    prescribed,    // a caller-supplied ordering
};

std::string_view to_string(BoundMethod m) noexcept;

/**
 * Sum over h of |A_{i_1} n ... n A_{i_h}| for the witness ordering.
 * step_sizes[h] is the h-th intersection size; they are non-increasing and
 * sum to value. `exact` is set only when value is proven to be the maximum
 * over all orderings.
 */
struct BoundCertificate {
    std::size_t value = 0;
    std::size_t rows = 0;  // F, the rate denominator
    UserOrdering witness;
    std::vector<std::size_t> step_sizes;
    BoundMethod method = BoundMethod::prescribed;
    bool exact = false;
    std::uint64_t nodes = 0;  // search nodes visited (0 for non-search methods)

    Rational rate_bound() const
    {
        return rows == 0 ? Rational(0)
                         : Rational(static_cast<long long>(value), static_cast<long long>(rows));
    }
};

struct BoundOptions {
    std::uint64_t node_budget = 100'000'000;
    /// theorem1_auto runs the exact search only up to this many users.
    std::size_t max_exact_users = 12;
    /// Worker threads for the branch-and-bound; 0 = hardware concurrency.
    unsigned threads = 1;
};

/// Evaluates one ordering (any length up to K). Throws ParameterError on a
/// repeated or out-of-range user.
BoundCertificate eval_ordering(const StarPattern& pattern, const UserOrdering& order);

/**
 * Exact maximum over all orderings by branch-and-bound. Children are tried in
 * increasing user id; users whose next intersection coincides are collapsed
 * onto the smallest id; an empty intersection completes the ordering with
 * the remaining users ascending. The witness is the lexicographically
 * smallest optimal ordering, for any thread count. If the node budget runs
 * out the best ordering found so far is returned with exact = false.
 */
BoundCertificate theorem1_exact(const StarPattern& pattern, const BoundOptions& options = {});

/// Brute force over all K! orderings (reference; throws CapacityError for K > 11).
BoundCertificate theorem1_enumerate(const StarPattern& pattern);

BoundCertificate theorem1_greedy(const StarPattern& pattern);

/**
 * Exact when K <= max_exact_users and the budget suffices; otherwise the best
 * of greedy and the extra orderings supplied, flagged non-exact.
 */
BoundCertificate theorem1_auto(const StarPattern& pattern, const BoundOptions& options = {},
                               const std::vector<UserOrdering>& extra_orderings = {});

/// Sum over h of |complement(A_{i_1}) u ... u complement(A_{i_h})|, computed
/// from the unions directly. Throws std::logic_error if it disagrees with
/// L*F minus the intersection sum (De Morgan, per prefix).
std::size_t corollary1_value(const StarPattern& pattern, const UserOrdering& order);

} // namespace pdaw
