#include "pdaw/combinatorics.hpp"

#include "pdaw/error.hpp"

#include <limits>
#include <string>

namespace pdaw::comb {

BigInt binomial_big(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::uint64_t binomial(unsigned n, unsigned k)
{
    const BigInt r = binomial_big(n, k);
    if (r > std::numeric_limits<std::uint64_t>::max())
        throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
    return r.convert_to<std::uint64_t>();
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw CapacityError(std::to_string(base) + "^" + std::to_string(exponent) + " overflows 64 bits");
        r *= base;
    }
    return r;
}

std::vector<std::vector<int>> subsets_lex(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::size_t lex_rank(int n, const std::vector<int>& subset)
{
    // Count subsets that precede `subset`: at each position, those with a
    // smaller element there and the same prefix.
    const int k = static_cast<int>(subset.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[static_cast<std::size_t>(i)]; ++v)
            rank += binomial(static_cast<unsigned>(n - v), static_cast<unsigned>(k - i - 1));
        prev = subset[static_cast<std::size_t>(i)];
    }
    return static_cast<std::size_t>(rank);
}

} // namespace pdaw::comb
