// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "fixtures.hpp"
#include "oracles.hpp"

#include "pdaw/bound/orderings.hpp"
#include "pdaw/bound/search.hpp"
#include "pdaw/bound/theorem1.hpp"
#include "pdaw/closed_forms.hpp"
#include "pdaw/combinatorics.hpp"
#include "pdaw/constructions.hpp"
#include "pdaw/core/verify.hpp"
#include "pdaw/filler.hpp"
#include "pdaw/simulator.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace pdaw;

namespace {

// Collects failed checks for one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }
    const std::vector<std::string>& failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string str(const PdaParams& p)
{
    std::ostringstream s;
    s << "(" << p.users << "," << p.rows << "," << p.stars << "," << p.symbols << ")";
    return s.str();
}

void expect_pda(Checks& c, const std::string& name, const PdaGrid& g, PdaParams want)
{
    const auto r = verify_pda(g);
    if (!r.valid()) {
        c.expect(false, name + " fails verify_pda");
        return;
    }
    const auto p = pda_params(g);
    c.expect(p.users == want.users && p.rows == want.rows && p.stars == want.stars && p.symbols == want.symbols,
             name + " params " + str(p) + ", want " + str(want));
}

void golden_arrays(Checks& c)
{
    expect_pda(c, "(6,4,2,4)", fixtures::grid(fixtures::kPda6424), {6, 4, 2, 4});
    expect_pda(c, "partition(3,2) labels", fixtures::grid_from_labels(fixtures::kPartition32Labels), {9, 9, 3, 18});
    expect_pda(c, "bipartite(5,2,1) labels", fixtures::grid_from_labels(fixtures::kBipartite521Labels), {10, 5, 2, 10});
    expect_pda(c, "mn(4,2)", fixtures::grid(fixtures::kMn42), {4, 6, 3, 4});
    expect_pda(c, "(6,8,5,5)", fixtures::grid(fixtures::kPda6855), {6, 8, 5, 5});
    expect_pda(c, "(6,4,1,11)", fixtures::grid(fixtures::kPda64111), {6, 4, 1, 11});
    expect_pda(c, "partition(3,2)", partition_pda({3, 2}), {9, 9, 3, 18});
    expect_pda(c, "bipartite(5,2,1)", bipartite_pda({5, 2, 1, 1}), {10, 5, 2, 10});
}

void pda64111_exact(Checks& c)
{
    const auto cert = theorem1_exact(to_star_pattern(fixtures::grid(fixtures::kPda64111)));
    c.expect(cert.exact && cert.value == 11, "value " + std::to_string(cert.value));
    const std::vector<std::size_t> steps{3, 3, 2, 2, 1, 0};
    c.expect(cert.step_sizes == steps, "step decomposition differs from 3+3+2+2+1");
}

void theorem3_example3(Checks& c)
{
    for (auto mode : {SearchMode::exhaustive, SearchMode::canonical}) {
        SearchOptions opts;
        opts.mode = mode;
        const auto r = theorem3_search(4, 6, 3, opts);
        const std::string tag = std::string(to_string(mode)) + ": ";
        c.expect(r.exhaustive, tag + "search incomplete");
        c.expect(r.best_value == 4, tag + "value " + std::to_string(r.best_value));
        c.expect(r.rate_bound() == Rational(2, 3), tag + "rate bound " + to_string(r.rate_bound()));
        const auto fill = fill_exact(r.best_pattern);
        c.expect(verify_pda(fill.grid).valid(), tag + "filled witness is not a PDA");
        c.expect(fill.optimal && fill.symbols == 4, tag + "filled witness S = " + std::to_string(fill.symbols));
        c.note(tag + std::to_string(r.nodes_explored) + " nodes");
    }
}

void partition_q2(Checks& c)
{
    for (int m = 2; m <= 8; ++m) {
        const auto g = partition_pda({2, m});
        const auto v = eval_ordering(to_star_pattern(g), partition_ordering(2, m)).value;
        const std::size_t want = std::size_t{1} << m;
        c.expect(v == want && pda_params(g).symbols == want,
                 "m=" + std::to_string(m) + ": ordered " + std::to_string(v) + ", S " +
                     std::to_string(pda_params(g).symbols));
    }
}

void partition_derived(Checks& c)
{
    const auto v32 = eval_ordering(to_star_pattern(partition_pda({3, 2})), partition_ordering(3, 2)).value;
    c.expect(v32 == 15, "(3,2) ordered value " + std::to_string(v32));
    for (int q : {3, 4, 5})
        for (int m : {2, 4}) {
            const auto closed = partition_even_form(q, m);
            const auto oracle = partition_ordered_value(q, m);
            c.expect(closed == oracle, "even form q=" + std::to_string(q) + " m=" + std::to_string(m));
        }
    const auto v33 = partition_ordered_value(3, 3);
    c.expect(v33 == 47, "(3,3) oracle " + to_string(v33));
}

void bipartite_optimal(Checks& c)
{
    for (int m = 3; m <= 8; ++m)
        for (int a = 1; a < m; ++a)
            for (int b = 1; a + b < m; ++b) {
                const auto g = bipartite_pda({m, a, b, 1});
                const auto v = eval_ordering(to_star_pattern(g), bipartite_ordering(m, a, b)).value;
                const auto want = comb::binomial(static_cast<unsigned>(m), static_cast<unsigned>(a + b));
                c.expect(v == want && pda_params(g).symbols == want,
                         "(" + std::to_string(m) + "," + std::to_string(a) + "," + std::to_string(b) + ") ordered " +
                             std::to_string(v) + ", want " + std::to_string(want));
            }
    for (int m = 3; m <= 16; ++m)
        for (int a = 1; a < m; ++a)
            for (int b = 1; a + b < m; ++b) {
                try {
                    binomial_identity_check(m, a, b);
                } catch (const std::exception& e) {
                    c.expect(false, std::string("binomial identity: ") + e.what());
                }
            }
}

void simulator(Checks& c)
{
    const auto grid = fixtures::grid(fixtures::kPda6424);
    const auto lib = FileLibrary::generate(6, 4, 64, 1);
    const auto t = deliver(grid, lib, DemandVector::parse("1,2,3,4,5,6"));
    // Signal s is W_{d_k, j} summed over (user, row) pairs, 0-based here.
    const std::vector<std::vector<SignalTerm>> terms{
        {{0, 2}, {1, 1}, {3, 0}}, {{0, 3}, {2, 1}, {4, 0}}, {{1, 3}, {2, 2}, {5, 0}}, {{3, 3}, {4, 2}, {5, 1}}};
    c.expect(t.signals.size() == 4, "signal count " + std::to_string(t.signals.size()));
    for (std::size_t s = 0; s < std::min<std::size_t>(4, t.signals.size()); ++s) {
        c.expect(t.signals[s].terms == terms[s], "signal " + std::to_string(s + 1) + " terms");
        std::vector<std::byte> want(lib.packet_len(), std::byte{0});
        for (const auto& term : terms[s]) {
            const auto p = lib.packet(term.user, term.row);  // d_k = k
            for (std::size_t i = 0; i < want.size(); ++i)
                want[i] ^= p[i];
        }
        c.expect(t.signals[s].payload == want, "signal " + std::to_string(s + 1) + " payload");
    }
    const auto r = decode(grid, t, place(grid, lib), lib);
    c.expect(r.verified, "(6,4,2,4) decode");

    const auto mn = mn_pda(4, 2);
    const auto lib6 = FileLibrary::generate(6, mn.rows(), 64, 7);
    const auto demands = all_demands(6, 4);
    const auto sweep = simulate_sweep(mn, lib6, demands, 1);
    c.expect(sweep.demands == 1296 && sweep.decoded == 1296,
             "mn(4,2) sweep decoded " + std::to_string(sweep.decoded) + "/" + std::to_string(sweep.demands));
    c.expect(sweep.rate == Rational(2, 3), "mn(4,2) rate " + to_string(sweep.rate));
}

void property_suites(Checks& c)
{
    std::mt19937_64 rng(20240601);
    int cases = 0;
    for (int trial = 0; trial < 300; ++trial, ++cases) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const auto g = oracle::random_grid(rng, dim(rng), dim(rng), 0.45, 5);
        auto fast = verify_pda(g).violations;
        std::erase_if(fast, [](const Violation& v) { return v.axiom != Axiom::C3a && v.axiom != Axiom::C3b; });
        auto slow = oracle::c3_pairwise(g);
        std::sort(slow.begin(), slow.end());
        c.expect(fast == slow, "C3 checker differs from pairwise oracle, trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 150; ++trial, ++cases) {
        const std::size_t K = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        const std::size_t F = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(0, F)(rng);
        const auto p = oracle::random_pattern(rng, K, F, r);
        const auto bb = theorem1_exact(p);
        const auto brute = oracle::permutation_max(p);
        c.expect(bb.exact && bb.value == brute.first, "B&B " + std::to_string(bb.value) + " vs brute force " +
                                                          std::to_string(brute.first));
    }
    for (int trial = 0; trial < 150; ++trial, ++cases) {
        const std::size_t K = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const std::size_t F = std::uniform_int_distribution<std::size_t>(1, 70)(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(0, F)(rng);
        const auto p = oracle::random_pattern(rng, K, F, r);
        std::vector<std::size_t> order(K);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        try {
            const auto unions = corollary1_value(p, UserOrdering{order});
            c.expect(unions == K * F - oracle::ordering_value(oracle::as_sets(p), order), "union identity");
        } catch (const std::exception& e) {
            c.expect(false, std::string("union identity: ") + e.what());
        }
    }
    for (int q = 3; q <= 64; ++q)
        for (int z = 2; z <= q; ++z, ++cases) {
            c.expect(phi(q, z) < 1, "phi >= 1 at q=" + std::to_string(q));
            if (z < q)
                c.expect(phi(q, z + 1) <= phi(q, z), "phi increases at q=" + std::to_string(q));
        }
    for (int q = 2; q <= 6; ++q)
        for (int m = 2; m <= 8; ++m, ++cases) {
            const auto counts = partition_counts(q, m);
            const auto brute = oracle::residue_buckets(q, m);
            for (int v = 0; v < q; ++v)
                c.expect(counts.c_sizes[static_cast<std::size_t>(v)] == BigInt(brute[static_cast<std::size_t>(v)]),
                         "|C_v| q=" + std::to_string(q) + " m=" + std::to_string(m));
            if (q > 2) {
                const auto [common, odd] = prop2_values(q, m);
                const int ex = exceptional_residue(q, m);
                for (int v = 1; v <= q; ++v)
                    c.expect(counts.c_sizes[static_cast<std::size_t>(v - 1)] == (v == ex ? odd : common),
                             "closed-form |C_v| q=" + std::to_string(q) + " m=" + std::to_string(m));
            }
        }
    for (int q = 2; q <= 5; ++q)
        for (int m = 2; m <= 4; ++m)
            for (int l = 1; l <= q - 1; ++l)
                for (const auto& residues : comb::subsets_lex(q, l)) {
                    std::vector<int> tail(static_cast<std::size_t>(m - 1), 1);
                    for (;;) {
                        ++cases;
                        c.expect(lemma3_intersection(q, m, residues, tail) ==
                                     oracle::lemma3_set_count(q, residues, tail),
                                 "intersection size q=" + std::to_string(q) + " m=" + std::to_string(m));
                        std::size_t i = 0;
                        while (i < tail.size() && ++tail[i] == q)
                            tail[i++] = 1;
                        if (i == tail.size())
                            break;
                    }
                }
    // Soundness: every generated PDA has S at least the exact bound.
    std::vector<PdaGrid> grids;
    for (int q = 2; q <= 3; ++q)
        for (int m = 1; m <= 3; ++m)
            grids.push_back(partition_pda({q, m}));
    for (int m = 3; m <= 7; ++m)
        for (int a = 1; a < m; ++a)
            for (int b = 1; a + b < m; ++b)
                if (comb::binomial(static_cast<unsigned>(m), static_cast<unsigned>(a)) <= 12)
                    grids.push_back(bipartite_pda({m, a, b, 1}));
    for (int k = 2; k <= 8; ++k)
        for (int t = 1; t < k; ++t)
            grids.push_back(mn_pda(k, t));
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t K = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const std::size_t F = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(0, F)(rng);
        grids.push_back(fill_greedy(oracle::random_pattern(rng, K, F, r), VertexOrder::row_major));
    }
    for (const auto& g : grids) {
        ++cases;
        const auto cert = theorem1_exact(to_star_pattern(g));
        c.expect(cert.exact && cert.value <= pda_params(g).symbols, "soundness: bound " + std::to_string(cert.value) +
                                                                         " above S " +
                                                                         std::to_string(pda_params(g).symbols));
    }
    c.note(std::to_string(cases) + " cases");
}

void listed_placement_discrepancy(Checks& c)
{
    const auto displayed = theorem1_exact(fixtures::pda6855_listed_sets());
    c.note("exact on the displayed sets = " + std::to_string(displayed.value) + " (the stated maximum of 4 is not asserted)");
    const auto g = fixtures::grid(fixtures::kPda6855);
    expect_pda(c, "(6,8,5,5)", g, {6, 8, 5, 5});
    const auto own = theorem1_exact(to_star_pattern(g));
    c.expect(own.exact && own.value <= 5, "exact on the array's own placement = " + std::to_string(own.value));
    c.note("exact on the array's own placement = " + std::to_string(own.value));
}

void ratio_table(Checks& c)
{
    BoundOptions opts;
    for (int m = 2; m <= 6; ++m) {
        const auto r = ratio_report(2, m, true, opts);
        c.expect(r.s_exact && r.mu && *r.mu == Rational(1), "q=2 m=" + std::to_string(m) + " ratio not 1");
        c.expect(r.formula_ratio == Rational(1), "q=2 m=" + std::to_string(m) + " formula ratio not 1");
    }
    for (int m = 2; m <= 3; ++m) {
        const auto r = ratio_report(3, m, true, opts);
        c.expect(r.s_exact.has_value(), "q=3 m=" + std::to_string(m) + " exact search did not complete");
        if (r.s_exact) {
            c.expect(r.s_derived <= *r.s_exact && *r.s_exact <= r.s_pda,
                     "q=3 m=" + std::to_string(m) + " sandwich broken");
            c.note("q=3 m=" + std::to_string(m) + ": " + r.s_derived.str() + " <= " +
                   r.s_exact->str() + " <= " + r.s_pda.str());
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Checks&)> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "golden arrays verify with stated params", 1, golden_arrays},
        {2, "exact bound on the (6,4,1,11) placement is 11 = 3+3+2+2+1", 1, pda64111_exact},
        {3, "min-max search (K,F,Z)=(4,6,3) gives 4, rate 2/3, witness fills to S=4", 60, theorem3_example3},
        {4, "partition q=2 ordered bound meets S = 2^m, m=2..8", 10, partition_q2},
        {5, "partition derived values 15, 47 and even-m closed form", 30, partition_derived},
        {6, "bipartite ordered bound meets C(m,a+b), binomial identity m<=16", 30, bipartite_optimal},
        {7, "simulator reproduces the four (6,4,2,4) signals; mn(4,2) sweep decodes", 60, simulator},
        {8, "randomized property suites against brute-force oracles", 300, property_suites},
        {9, "listed (6,8,5,5) placement bound reported; array valid with exact bound <= 5", 30, listed_placement_discrepancy},
        {10, "ratio table: q=2 ratio 1, q=3 m<=3 sandwich holds", 120, ratio_table},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checks checks;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(checks);
        } catch (const std::exception& e) {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.limit_s)
            checks.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_s) + " s");
        const bool ok = checks.failures().empty();
        failed += !ok;
        std::printf("%s criterion %2d: %s (%.3f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs);
        for (const auto& n : checks.notes())
            std::printf("      note: %s\n", n.c_str());
        for (const auto& f : checks.failures())
            std::printf("      fail: %s\n", f.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
