#include "pdaw/bound/search.hpp"

#include "pdaw/combinatorics.hpp"
#include "pdaw/core/canonical.hpp"
#include "pdaw/error.hpp"

#include <limits>
#include <set>
#include <string>

namespace pdaw {

std::string_view to_string(SearchMode m) noexcept
{
    return m == SearchMode::exhaustive ? "exhaustive" : "canonical";
}

namespace {

class Search {
public:
    Search(std::size_t K, std::size_t F, std::size_t Z, const SearchOptions& opt) : K_(K), F_(F), opt_(opt)
    {
        for (const auto& s : comb::subsets_lex(static_cast<int>(F), static_cast<int>(F - Z)))
            choices_.push_back(RowSet::from_one_based(F, s));
        report_.users = K;
        report_.rows = F;
        report_.stars = Z;
        report_.mode = opt.mode;
        seen_.resize(K + 1);
    }

    SearchReport run()
    {
        if (opt_.mode == SearchMode::exhaustive)
            exhaustive();
        else
            canonical();
        report_.exhaustive = !out_of_budget_ && inner_exact_;
        return report_;
    }

private:
    bool tick()
    {
        if (++report_.nodes_explored > opt_.node_budget) {
            out_of_budget_ = true;
            return false;
        }
        return true;
    }

    std::size_t bound_of(const std::vector<RowSet>& sets)
    {
        const auto cert = theorem1_exact(StarPattern(F_, sets), opt_.inner);
        inner_exact_ = inner_exact_ && cert.exact;
        return cert.value;
    }

    void offer(const std::vector<RowSet>& sets, std::size_t value)
    {
        if (!have_best_ || value < report_.best_value) {
            have_best_ = true;
            report_.best_value = value;
            report_.best_pattern = StarPattern(F_, sets);
        }
    }

    void exhaustive()
    {
        std::vector<std::size_t> idx(K_, 0);
        std::vector<RowSet> sets(K_);
        for (;;) {
            if (!tick())
                return;
            for (std::size_t k = 0; k < K_; ++k)
                sets[k] = choices_[idx[k]];
            offer(sets, bound_of(sets));
            std::size_t k = K_;
            while (k > 0 && ++idx[k - 1] == choices_.size())
                idx[--k] = 0;
            if (k == 0)
                return;
        }
    }

    void canonical()
    {
        std::vector<RowSet> sets{choices_.front()};
        extend(sets);
    }

    void extend(std::vector<RowSet>& sets)
    {
        if (out_of_budget_ || !tick())
            return;
        const std::size_t value = bound_of(sets);
        if (sets.size() == K_) {
            offer(sets, value);
            return;
        }
        if (have_best_ && value >= report_.best_value) {
            ++report_.pruned;
            return;
        }
        for (const auto& c : choices_) {
            if (out_of_budget_)
                return;
            sets.push_back(c);
            const auto key = encode(canonical_pattern(StarPattern(F_, sets)));
            if (seen_[sets.size()].insert(key).second)
                extend(sets);
            else
                ++report_.dedup_hits;
            sets.pop_back();
        }
    }

    static std::vector<RowSet::Word> encode(const StarPattern& p)
    {
        std::vector<RowSet::Word> out;
        for (const auto& s : p.uncached_sets())
            out.insert(out.end(), s.words().begin(), s.words().end());
        return out;
    }

    std::size_t K_;
    std::size_t F_;
    const SearchOptions& opt_;
    std::vector<RowSet> choices_;
    std::vector<std::set<std::vector<RowSet::Word>>> seen_;
    SearchReport report_;
    bool have_best_ = false;
    bool out_of_budget_ = false;
    bool inner_exact_ = true;
};

} // namespace

SearchReport theorem3_search(std::size_t users, std::size_t rows, std::size_t stars, const SearchOptions& options)
{
    if (users < 1 || rows < 1)
        throw ParameterError("search needs K >= 1 and F >= 1");
    if (stars > rows)
        throw ParameterError("search needs Z <= F, got Z=" + std::to_string(stars) + " F=" + std::to_string(rows));
    if (rows > kMaxRows)
        throw CapacityError("F exceeds PDAW_MAX_ROWS");
    return Search(users, rows, stars, options).run();
}

} // namespace pdaw
