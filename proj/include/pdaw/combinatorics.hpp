#pragma once

#include "pdaw/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pdaw::comb {

/// C(n, k) as an exact big integer; 0 when k > n.
BigInt binomial_big(unsigned n, unsigned k);

/// C(n, k) in 64 bits; throws CapacityError on overflow.
std::uint64_t binomial(unsigned n, unsigned k);

/// base^exponent in 64 bits; throws CapacityError on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// All k-subsets of {1..n}, each ascending, in lexicographic order
/// ({1,2},{1,3},...,{1,n},{2,3},...).
std::vector<std::vector<int>> subsets_lex(int n, int k);

/// Position of a subset (ascending, 1-based elements) in subsets_lex(n, k).
std::size_t lex_rank(int n, const std::vector<int>& subset);

} // namespace pdaw::comb
