#include "pdaw/filler.hpp"

#include "pdaw/bound/theorem1.hpp"

#include <algorithm>
#include <numeric>

namespace pdaw {

ConflictGraph::ConflictGraph(const StarPattern& p) : rows_(p.rows()), cols_(p.users())
{
    for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t k = 0; k < cols_; ++k)
            if (!p.is_star(j, k))
                cells_.push_back({j, k});
    const std::size_t n = cells_.size();
    words_ = (n + 63) / 64;
    adj_.assign(n * words_, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const auto& a = cells_[u];
            const auto& b = cells_[v];
            const bool conflict = a.row == b.row || a.col == b.col || !p.is_star(a.row, b.col) ||
                                  !p.is_star(b.row, a.col);
            if (!conflict)
                continue;
            adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
            adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
            ++edges_;
        }
}

std::size_t ConflictGraph::degree(std::size_t v) const
{
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w)
        d += static_cast<std::size_t>(__builtin_popcountll(adj_[v * words_ + w]));
    return d;
}

ConflictGraph build_conflict_graph(const StarPattern& pattern)
{
    return ConflictGraph(pattern);
}

std::string_view to_string(VertexOrder o) noexcept
{
    return o == VertexOrder::row_major ? "row_major" : "degree_desc";
}

namespace {

PdaGrid to_grid(const ConflictGraph& g, const std::vector<std::size_t>& colour)
{
    std::vector<Symbol> cells(g.rows() * g.cols(), kStar);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        cells[g.cell(v).row * g.cols() + g.cell(v).col] = static_cast<Symbol>(colour[v] + 1);
    return PdaGrid(g.rows(), g.cols(), std::move(cells)).relabeled_by_first_appearance();
}

std::vector<std::size_t> greedy_colouring(const ConflictGraph& g, VertexOrder order)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    if (order == VertexOrder::degree_desc) {
        std::vector<std::size_t> deg(n);
        for (std::size_t v = 0; v < n; ++v)
            deg[v] = g.degree(v);
        std::stable_sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    }
    constexpr std::size_t kUncoloured = static_cast<std::size_t>(-1);
    std::vector<std::size_t> colour(n, kUncoloured);
    std::vector<char> taken;
    for (auto v : seq) {
        taken.assign(n + 1, 0);
        for (std::size_t u = 0; u < n; ++u)
            if (colour[u] != kUncoloured && g.adjacent(u, v))
                taken[colour[u]] = 1;
        std::size_t c = 0;
        while (taken[c])
            ++c;
        colour[v] = c;
    }
    return colour;
}

std::size_t colours_used(const std::vector<std::size_t>& colour)
{
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

// Greedy clique: repeatedly add the highest-degree vertex adjacent to all
// chosen ones, trying every start vertex.
std::size_t greedy_clique(const ConflictGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::size_t best = n > 0 ? 1 : 0;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> clique{s};
        for (;;) {
            std::size_t pick = n;
            for (std::size_t v = 0; v < n; ++v) {
                if (std::find(clique.begin(), clique.end(), v) != clique.end())
                    continue;
                bool all = true;
                for (auto c : clique)
                    all = all && g.adjacent(c, v);
                if (all && (pick == n || deg[v] > deg[pick]))
                    pick = v;
            }
            if (pick == n)
                break;
            clique.push_back(pick);
        }
        best = std::max(best, clique.size());
    }
    return best;
}

class Dsatur {
public:
    Dsatur(const ConflictGraph& g, std::size_t upper, std::vector<std::size_t> best, std::size_t lower,
           std::uint64_t budget)
        : g_(g), n_(g.vertex_count()), upper_(upper), lower_(lower), budget_(budget), best_(std::move(best)),
          colour_(n_, kNone), sat_count_(n_, 0), stride_(upper + 1), nbr_colour_(n_ * stride_, 0), deg_(n_)
    {
        for (std::size_t v = 0; v < n_; ++v)
            deg_[v] = g.degree(v);
    }

    void run()
    {
        if (upper_ > lower_)
            search(0, 0);
    }

    std::size_t upper() const { return upper_; }
    const std::vector<std::size_t>& best() const { return best_; }
    bool complete() const { return !out_of_budget_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::size_t pick() const
    {
        std::size_t v = kNone;
        for (std::size_t u = 0; u < n_; ++u) {
            if (colour_[u] != kNone)
                continue;
            if (v == kNone || sat_count_[u] > sat_count_[v] ||
                (sat_count_[u] == sat_count_[v] && deg_[u] > deg_[v]))
                v = u;
        }
        return v;
    }

    void assign(std::size_t v, std::size_t c, int delta)
    {
        for (std::size_t u = 0; u < n_; ++u) {
            if (u == v || !g_.adjacent(u, v))
                continue;
            auto& cnt = nbr_colour_[u * stride_ + c];
            if (delta > 0 && cnt++ == 0)
                ++sat_count_[u];
            else if (delta < 0 && --cnt == 0)
                --sat_count_[u];
        }
    }

    void search(std::size_t coloured, std::size_t used)
    {
        if (out_of_budget_ || upper_ <= lower_)
            return;
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            return;
        }
        if (coloured == n_) {
            upper_ = used;
            best_ = colour_;
            return;
        }
        const std::size_t v = pick();
        // A new colour is only worth opening if it stays below the incumbent.
        const std::size_t limit = std::min(used + 1, upper_ - 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (nbr_colour_[v * stride_ + c] != 0)
                continue;
            colour_[v] = c;
            assign(v, c, +1);
            search(coloured + 1, std::max(used, c + 1));
            assign(v, c, -1);
            colour_[v] = kNone;
            if (out_of_budget_ || upper_ <= lower_ || c + 1 >= upper_)
                return;
        }
    }

    const ConflictGraph& g_;
    std::size_t n_;
    std::size_t upper_;
    std::size_t lower_;
    std::uint64_t budget_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> colour_;
    std::vector<std::size_t> sat_count_;
    std::size_t stride_;
    std::vector<std::size_t> nbr_colour_;
    std::vector<std::size_t> deg_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
};

} // namespace

PdaGrid fill_greedy(const StarPattern& pattern, VertexOrder order)
{
    const ConflictGraph g(pattern);
    return to_grid(g, greedy_colouring(g, order));
}

FillResult fill_exact(const StarPattern& pattern, std::uint64_t node_budget)
{
    const ConflictGraph g(pattern);
    FillResult r;
    auto best = greedy_colouring(g, VertexOrder::degree_desc);
    auto alt = greedy_colouring(g, VertexOrder::row_major);
    if (colours_used(alt) < colours_used(best))
        best = std::move(alt);

    r.clique_bound = greedy_clique(g);
    r.theorem1_bound = theorem1_auto(pattern).value;
    r.lower_bound = std::max(r.clique_bound, r.theorem1_bound);

    const std::size_t upper = colours_used(best);
    Dsatur search(g, upper, std::move(best), r.lower_bound, node_budget);
    search.run();
    r.grid = to_grid(g, search.best());
    r.symbols = search.upper();
    r.optimal = search.complete();
    r.nodes = search.nodes();
    return r;
}

} // namespace pdaw
