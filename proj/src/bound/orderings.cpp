#include "pdaw/bound/orderings.hpp"

#include "pdaw/closed_forms.hpp"
#include "pdaw/combinatorics.hpp"
#include "pdaw/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pdaw {

UserOrdering partition_ordering(int q, int m)
{
    if (q < 2 || m < 1)
        throw ParameterError("partition ordering needs q >= 2 and m >= 1");
    const auto id = [q](int u, int v) { return static_cast<std::size_t>((u - 1) * q + (v - 1)); };
    UserOrdering o;
    for (int u = 1; u <= m; ++u)
        o.users.push_back(id(u, q));

    std::vector<int> vs(static_cast<std::size_t>(q));
    std::iota(vs.begin(), vs.end(), 1);
    if (m >= 2) {
        const auto counts = partition_counts(q, m);
        std::stable_sort(vs.begin(), vs.end(), [&](int x, int y) {
            return counts.c_sizes[static_cast<std::size_t>(x - 1)] > counts.c_sizes[static_cast<std::size_t>(y - 1)];
        });
    }
    for (int v : vs)
        o.users.push_back(id(m + 1, v));

    std::vector<bool> used(static_cast<std::size_t>((m + 1) * q), false);
    for (auto u : o.users)
        used[u] = true;
    for (std::size_t k = 0; k < used.size(); ++k)
        if (!used[k])
            o.users.push_back(k);
    return o;
}

UserOrdering bipartite_ordering(int m, int a, int b)
{
    if (a < 1 || b < 1 || a + b > m)
        throw ParameterError("bipartite ordering needs a, b >= 1 and a + b <= m");
    UserOrdering o;
    for (int g = a; g <= m; ++g) {
        for (const auto& drop : comb::subsets_lex(g - 1, g - a)) {
            std::vector<int> user;
            for (int x = 1; x <= g; ++x)
                if (!std::binary_search(drop.begin(), drop.end(), x))
                    user.push_back(x);
            o.users.push_back(comb::lex_rank(m, user));
        }
    }
    return o;
}

UserOrdering grouping_ordering(int m, int a, int b, int h)
{
    if (h < 1)
        throw ParameterError("group multiplicity h must be >= 1");
    const auto base = bipartite_ordering(m, a, b);
    const auto per_copy = comb::binomial(static_cast<unsigned>(m), static_cast<unsigned>(a));
    UserOrdering o;
    for (auto u : base.users)
        for (int i = 0; i < h; ++i)
            o.users.push_back(u + static_cast<std::size_t>(i) * per_copy);
    return o;
}

} // namespace pdaw
