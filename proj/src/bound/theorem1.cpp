#include "pdaw/bound/theorem1.hpp"

#include "pdaw/error.hpp"
#include "pdaw/simd/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace pdaw {

using simd::Word;

UserOrdering UserOrdering::from_one_based(const std::vector<int>& users)
{
    UserOrdering o;
    o.users.reserve(users.size());
    for (int u : users) {
        if (u < 1)
            throw ParameterError("user ids are 1-based, got " + std::to_string(u));
        o.users.push_back(static_cast<std::size_t>(u - 1));
    }
    return o;
}

std::vector<int> UserOrdering::one_based() const
{
    std::vector<int> out;
    out.reserve(users.size());
    for (auto u : users)
        out.push_back(static_cast<int>(u) + 1);
    return out;
}

std::string_view to_string(BoundMethod m) noexcept
{
    switch (m) {
    case BoundMethod::exact: return "exact";
    case BoundMethod::branch_bound: return "branch_bound";
    case BoundMethod::greedy: return "greedy";
    case BoundMethod::prescribed: return "prescribed";
    }
    return "?";
}

namespace {

void check_ordering(const StarPattern& p, const UserOrdering& order)
{
    std::vector<bool> seen(p.users(), false);
    for (auto u : order.users) {
        if (u >= p.users())
            throw ParameterError("user " + std::to_string(u + 1) + " out of range [1," +
                                 std::to_string(p.users()) + "]");
        if (seen[u])
            throw ParameterError("user " + std::to_string(u + 1) + " repeated in ordering");
        seen[u] = true;
    }
}

// Walks an ordering, filling step sizes; stops intersecting once empty.
BoundCertificate evaluate(const StarPattern& p, const std::vector<std::size_t>& users, BoundMethod method)
{
    BoundCertificate cert;
    cert.rows = p.rows();
    cert.method = method;
    cert.witness.users = users;
    cert.step_sizes.assign(users.size(), 0);
    if (users.empty())
        return cert;
    RowSet cur = p.uncached(users[0]);
    for (std::size_t h = 0; h < users.size(); ++h) {
        if (h > 0)
            cur &= p.uncached(users[h]);
        const std::size_t c = cur.count();
        if (c == 0)
            break;
        cert.step_sizes[h] = c;
        cert.value += c;
    }
    return cert;
}

// Flat copy of the uncached sets for the search loops.
struct Masks {
    std::size_t users = 0;
    std::size_t words = 0;
    std::vector<Word> data;

    explicit Masks(const StarPattern& p) : users(p.users()), words(RowSet::words_for(p.rows()))
    {
        data.reserve(users * words);
        for (const auto& s : p.uncached_sets())
            data.insert(data.end(), s.words().begin(), s.words().end());
    }
    const Word* of(std::size_t k) const { return data.data() + k * words; }
};

struct Shared {
    std::atomic<std::size_t> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::uint64_t budget = 0;
};

// One depth-first search, possibly restricted to a subtree whose first user
// is fixed. `local_best` starts at floor; the witness is replaced only on a
// strict improvement, so the first ordering met at the optimum (the
// lexicographically smallest) is kept.
class Searcher {
public:
    Searcher(const Masks& m, std::size_t full, Shared& shared, bool parallel)
        : m_(m), full_(full), shared_(shared), parallel_(parallel),
          buf_((m.users + 1) * m.users * m.words), counts_((m.users + 1) * m.users),
          used_(m.users, false), kids_(m.users + 1), sorted_(m.users + 1)
    {
    }

    void run(std::size_t floor, const std::vector<std::size_t>& first_users)
    {
        local_best_ = floor;
        for (auto u : first_users) {
            if (stop())
                break;
            // Depth-1 node: the intersection is A_u itself.
            Word* level = buf_.data();
            std::copy(m_.of(u), m_.of(u) + m_.words, level);
            used_[u] = true;
            path_.assign(1, u);
            count_node();
            descend(1, level, full_, full_);
            used_[u] = false;
        }
    }

    std::size_t best() const { return local_best_; }
    const std::vector<std::size_t>& witness() const { return witness_; }
    bool found() const { return !witness_.empty(); }

private:
    bool stop() const { return shared_.out_of_budget.load(std::memory_order_relaxed); }

    void count_node()
    {
        const auto n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > shared_.budget)
            shared_.out_of_budget.store(true, std::memory_order_relaxed);
    }

    bool prunable(std::size_t bound) const
    {
        if (bound <= local_best_)
            return true;
        return parallel_ && bound < shared_.best.load(std::memory_order_relaxed);
    }

    void record(std::size_t value)
    {
        if (value <= local_best_)
            return;
        local_best_ = value;
        witness_ = path_;
        for (std::size_t k = 0; k < m_.users; ++k)
            if (!used_[k])
                witness_.push_back(k);
        if (parallel_) {
            auto cur = shared_.best.load(std::memory_order_relaxed);
            while (cur < value && !shared_.best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
            }
        }
    }

    // `cur` is the intersection of the users on path_ (depth = path_.size()).
    void descend(std::size_t depth, const Word* cur, std::size_t cur_count, std::size_t sum)
    {
        const std::size_t remaining = m_.users - depth;
        if (remaining == 0 || cur_count == 0) {
            record(sum);
            return;
        }
        Word* children = buf_.data() + depth * m_.users * m_.words;
        std::size_t* counts = counts_.data() + depth * m_.users;
        // Build distinct children, smallest id first. `all` keeps every
        // child's count (duplicates included) for the bound.
        std::size_t n = 0;
        // Per-depth scratch, sized up front so parent frames keep valid references.
        std::vector<std::size_t>& kid_ids = kids_[depth];
        std::vector<std::size_t>& all = sorted_[depth];
        kid_ids.clear();
        all.clear();
        for (std::size_t k = 0; k < m_.users; ++k) {
            if (used_[k])
                continue;
            Word* slot = children + n * m_.words;
            const std::size_t c = simd::active().and_store_popcount(cur, m_.of(k), slot, m_.words);
            all.push_back(c);
            bool dup = false;
            for (std::size_t j = 0; j < n && !dup; ++j)
                dup = counts[j] == c && std::equal(slot, slot + m_.words, children + j * m_.words);
            if (dup)
                continue;
            counts[n] = c;
            kid_ids.push_back(k);
            ++n;
        }
        // Admissible bound: the j-th later term lies inside the children of
        // j different users, so it is at most the j-th largest child count.
        std::sort(all.begin(), all.end(), std::greater<>());
        std::size_t bound = sum;
        for (std::size_t j = 0; j < remaining; ++j)
            bound += all[j];
        if (prunable(bound))
            return;
        for (std::size_t i = 0; i < n; ++i) {
            if (stop())
                return;
            const std::size_t k = kid_ids[i];
            const std::size_t c = counts[i];
            // Tail bound for this child: c on every remaining step.
            if (prunable(sum + c * remaining))
                continue;
            count_node();
            used_[k] = true;
            path_.push_back(k);
            descend(depth + 1, children + i * m_.words, c, sum + c);
            path_.pop_back();
            used_[k] = false;
        }
    }

    const Masks& m_;
    std::size_t full_;
    Shared& shared_;
    bool parallel_;
    std::vector<Word> buf_;
    std::vector<std::size_t> counts_;
    std::vector<bool> used_;
    std::vector<std::size_t> path_;
    std::vector<std::vector<std::size_t>> kids_;
    std::vector<std::vector<std::size_t>> sorted_;
    std::size_t local_best_ = 0;
    std::vector<std::size_t> witness_;
};

// Users with pairwise distinct A_k, smallest id of each class.
std::vector<std::size_t> distinct_first_users(const StarPattern& p)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < p.users(); ++k) {
        bool dup = false;
        for (auto j : out)
            dup = dup || p.uncached(j) == p.uncached(k);
        if (!dup)
            out.push_back(k);
    }
    return out;
}

} // namespace

BoundCertificate eval_ordering(const StarPattern& pattern, const UserOrdering& order)
{
    check_ordering(pattern, order);
    return evaluate(pattern, order.users, BoundMethod::prescribed);
}

BoundCertificate theorem1_greedy(const StarPattern& pattern)
{
    const std::size_t K = pattern.users();
    std::vector<std::size_t> order;
    std::vector<bool> used(K, false);
    RowSet cur = RowSet::full(pattern.rows());
    for (std::size_t h = 0; h < K; ++h) {
        std::size_t pick = K, best = 0;
        for (std::size_t k = 0; k < K; ++k) {
            if (used[k])
                continue;
            const std::size_t c = cur.intersection_count(pattern.uncached(k));
            if (pick == K || c > best) {
                pick = k;
                best = c;
            }
        }
        used[pick] = true;
        order.push_back(pick);
        cur &= pattern.uncached(pick);
    }
    return evaluate(pattern, order, BoundMethod::greedy);
}

BoundCertificate theorem1_enumerate(const StarPattern& pattern)
{
    const std::size_t K = pattern.users();
    if (K > 11)
        throw CapacityError("full enumeration is limited to K <= 11, got K=" + std::to_string(K));
    std::vector<std::size_t> perm(K);
    std::iota(perm.begin(), perm.end(), 0);
    BoundCertificate best = evaluate(pattern, perm, BoundMethod::exact);
    std::uint64_t visited = 1;
    while (std::next_permutation(perm.begin(), perm.end())) {
        ++visited;
        auto cert = evaluate(pattern, perm, BoundMethod::exact);
        if (cert.value > best.value)
            best = std::move(cert);
    }
    best.exact = true;
    best.nodes = visited;
    return best;
}

BoundCertificate theorem1_exact(const StarPattern& pattern, const BoundOptions& options)
{
    const std::size_t K = pattern.users();
    const std::size_t full = pattern.uncached_size();
    const BoundCertificate greedy = theorem1_greedy(pattern);
    if (K == 0 || full == 0) {
        BoundCertificate c = greedy;
        std::iota(c.witness.users.begin(), c.witness.users.end(), 0);
        c = evaluate(pattern, c.witness.users, BoundMethod::branch_bound);
        c.exact = true;
        return c;
    }

    const Masks masks(pattern);
    Shared shared;
    shared.budget = options.node_budget;
    // Start just below greedy so an optimum equal to greedy is still found
    // at its lexicographically smallest ordering.
    const std::size_t floor = greedy.value - 1;
    shared.best = floor;
    const auto firsts = distinct_first_users(pattern);

    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, firsts.size()));

    std::size_t best_value = floor;
    std::vector<std::size_t> best_witness;

    if (threads <= 1) {
        Searcher s(masks, full, shared, false);
        s.run(floor, firsts);
        if (s.found()) {
            best_value = s.best();
            best_witness = s.witness();
        }
    } else {
        // Each worker takes whole top-level branches; results are merged in
        // branch order so ties resolve to the smallest first user.
        std::vector<std::size_t> values(firsts.size(), floor);
        std::vector<std::vector<std::size_t>> witnesses(firsts.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= firsts.size())
                    return;
                Searcher s(masks, full, shared, true);
                s.run(floor, {firsts[i]});
                if (s.found()) {
                    values[i] = s.best();
                    witnesses[i] = s.witness();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
        for (std::size_t i = 0; i < firsts.size(); ++i)
            if (!witnesses[i].empty() && values[i] > best_value) {
                best_value = values[i];
                best_witness = witnesses[i];
            }
    }

    BoundCertificate cert;
    if (best_witness.empty()) {
        cert = greedy;
    } else {
        cert = evaluate(pattern, best_witness, BoundMethod::branch_bound);
        if (cert.value != best_value)
            throw std::logic_error("branch-and-bound witness does not reproduce its value");
    }
    cert.method = BoundMethod::branch_bound;
    cert.exact = !shared.out_of_budget.load();
    cert.nodes = shared.nodes.load();
    return cert;
}

BoundCertificate theorem1_auto(const StarPattern& pattern, const BoundOptions& options,
                               const std::vector<UserOrdering>& extra_orderings)
{
    BoundCertificate best;
    if (pattern.users() <= options.max_exact_users) {
        best = theorem1_exact(pattern, options);
        if (best.exact)
            return best;
    } else {
        best = theorem1_greedy(pattern);
    }
    auto consider = [&](BoundCertificate c) {
        if (c.value > best.value)
            best = std::move(c);
    };
    if (best.method != BoundMethod::greedy)
        consider(theorem1_greedy(pattern));
    for (const auto& o : extra_orderings)
        consider(eval_ordering(pattern, o));
    best.exact = false;
    return best;
}

std::size_t corollary1_value(const StarPattern& pattern, const UserOrdering& order)
{
    check_ordering(pattern, order);
    std::size_t union_sum = 0;
    RowSet acc(pattern.rows());
    for (auto u : order.users) {
        acc |= pattern.cached(u);
        union_sum += acc.count();
    }
    const std::size_t inter = evaluate(pattern, order.users, BoundMethod::prescribed).value;
    if (union_sum + inter != order.users.size() * pattern.rows())
        throw std::logic_error("complement identity failed: " + std::to_string(union_sum) + " + " +
                               std::to_string(inter) + " != L*F");
    return union_sum;
}

} // namespace pdaw
