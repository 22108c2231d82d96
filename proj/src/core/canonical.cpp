#include "pdaw/core/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace pdaw {
namespace {

using Colors = std::vector<int>;

struct Incidence {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::size_t>> cols_of_row;
    std::vector<std::vector<std::size_t>> rows_of_col;
};

Incidence incidence_of(const StarPattern& p)
{
    Incidence inc{p.rows(), p.users(), std::vector<std::vector<std::size_t>>(p.rows()),
                  std::vector<std::vector<std::size_t>>(p.users())};
    for (std::size_t k = 0; k < p.users(); ++k)
        for (auto r : p.uncached(k).members()) {
            inc.rows_of_col[k].push_back(r);
            inc.cols_of_row[r].push_back(k);
        }
    return inc;
}

std::size_t class_count(const Colors& c)
{
    Colors s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// One round: recolour `self` by (own colour, sorted neighbour colours).
Colors recolor(const Colors& self, const Colors& other, const std::vector<std::vector<std::size_t>>& adj)
{
    std::vector<std::vector<int>> sig(self.size());
    for (std::size_t v = 0; v < self.size(); ++v) {
        sig[v].push_back(self[v]);
        std::vector<int> nb;
        nb.reserve(adj[v].size());
        for (auto u : adj[v])
            nb.push_back(other[u]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colors out(self.size());
    for (std::size_t v = 0; v < self.size(); ++v)
        out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    return out;
}

void refine(const Incidence& inc, Colors& row_colors, Colors& col_colors)
{
    while (true) {
        const auto before = class_count(row_colors) + class_count(col_colors);
        col_colors = recolor(col_colors, row_colors, inc.rows_of_col);
        row_colors = recolor(row_colors, col_colors, inc.cols_of_row);
        if (class_count(row_colors) + class_count(col_colors) == before)
            return;
    }
}

// Rows grouped by colour, classes in colour order, rows ascending inside.
std::vector<std::vector<std::size_t>> row_classes(const Colors& row_colors)
{
    std::map<int, std::vector<std::size_t>> by;
    for (std::size_t r = 0; r < row_colors.size(); ++r)
        by[row_colors[r]].push_back(r);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [c, rows] : by)
        out.push_back(std::move(rows));
    return out;
}

StarPattern build(const StarPattern& p, const std::vector<std::size_t>& order)
{
    // order[i] = original row placed at position i.
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = i;
    std::vector<RowSet> cols;
    cols.reserve(p.users());
    for (std::size_t k = 0; k < p.users(); ++k) {
        RowSet s(p.rows());
        for (auto r : p.uncached(k).members())
            s.set(pos[r]);
        cols.push_back(std::move(s));
    }
    std::sort(cols.begin(), cols.end());
    return StarPattern(p.rows(), std::move(cols));
}

StarPattern exact_scan(const StarPattern& p, const Incidence& inc, std::vector<std::vector<std::size_t>> classes,
                       CanonicalStats& stats)
{
    const std::size_t f = p.rows();
    std::vector<std::uint64_t> masks(p.users());
    std::vector<std::uint64_t> best;
    std::vector<std::size_t> best_order;
    std::vector<std::size_t> order;
    order.reserve(f);

    while (true) {
        order.clear();
        for (const auto& c : classes)
            order.insert(order.end(), c.begin(), c.end());
        std::fill(masks.begin(), masks.end(), 0);
        for (std::size_t i = 0; i < f; ++i)
            for (auto k : inc.cols_of_row[order[i]])
                masks[k] |= std::uint64_t{1} << (f - 1 - i);
        std::sort(masks.begin(), masks.end());
        ++stats.orderings_scanned;
        if (best.empty() || masks < best) {
            best = masks;
            best_order = order;
        }
        // Odometer over the classes; each class runs through its permutations.
        std::size_t c = 0;
        while (c < classes.size() && !std::next_permutation(classes[c].begin(), classes[c].end()))
            ++c;
        if (c == classes.size())
            break;
    }
    return build(p, best_order);
}

// Column profile of a partition: per column, the sorted class indices of its
// rows; the profiles sorted. Used to rank individualisation choices.
std::vector<std::vector<int>> profile(const Incidence& inc, const Colors& row_colors)
{
    std::vector<std::vector<int>> prof(inc.cols);
    for (std::size_t k = 0; k < inc.cols; ++k) {
        for (auto r : inc.rows_of_col[k])
            prof[k].push_back(row_colors[r]);
        std::sort(prof[k].begin(), prof[k].end());
    }
    std::sort(prof.begin(), prof.end());
    return prof;
}

StarPattern greedy_individualize(const StarPattern& p, const Incidence& inc, Colors row_colors, Colors col_colors)
{
    while (class_count(row_colors) < inc.rows) {
        const auto classes = row_classes(row_colors);
        const auto it = std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.size() > 1; });
        Colors best_rows, best_cols;
        std::vector<std::vector<int>> best_profile;
        for (auto r : *it) {
            Colors rc = row_colors, cc = col_colors;
            for (auto& x : rc)
                x *= 2;
            for (auto s : *it)
                if (s != r)
                    rc[s] += 1;
            refine(inc, rc, cc);
            auto prof = profile(inc, rc);
            if (best_rows.empty() || prof < best_profile) {
                best_profile = std::move(prof);
                best_rows = std::move(rc);
                best_cols = std::move(cc);
            }
        }
        row_colors = std::move(best_rows);
        col_colors = std::move(best_cols);
    }
    std::vector<std::size_t> order;
    for (const auto& c : row_classes(row_colors))
        order.push_back(c.front());
    return build(p, order);
}

} // namespace

StarPattern canonical_pattern(const StarPattern& pattern, CanonicalStats* stats)
{
    CanonicalStats local;
    CanonicalStats& st = stats != nullptr ? *stats : local;
    st = CanonicalStats{};

    const auto inc = incidence_of(pattern);
    Colors row_colors(pattern.rows(), 0);
    Colors col_colors(pattern.users(), 0);
    refine(inc, row_colors, col_colors);

    if (pattern.rows() <= kCanonicalExactRows) {
        st.exact = true;
        return exact_scan(pattern, inc, row_classes(row_colors), st);
    }
    st.exact = false;
    return greedy_individualize(pattern, inc, std::move(row_colors), std::move(col_colors));
}

} // namespace pdaw
