#include "pdaw/closed_forms.hpp"

#include "pdaw/bound/orderings.hpp"
#include "pdaw/combinatorics.hpp"
#include "pdaw/constructions.hpp"
#include "pdaw/error.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace pdaw {

namespace {

BigInt big(long long v) { return BigInt(v); }

void need_q(int q)
{
    if (q < 2)
        throw ParameterError("q must be at least 2, got " + std::to_string(q));
}

} // namespace

Rational phi(int q, int z)
{
    if (q <= 1)
        throw ParameterError("phi needs q >= 2, got " + std::to_string(q));
    if (z < 1)
        throw ParameterError("phi needs z >= 1, got " + std::to_string(z));
    const BigInt num = big(q - z) * pow_big(big(q), static_cast<unsigned>(z - 1));
    const BigInt den = pow_big(big(q - 1), static_cast<unsigned>(z));
    return make_rational(num, den);
}

PartitionCounts partition_counts(int q, int m)
{
    need_q(q);
    if (m < 2)
        throw ParameterError("partition counts need m >= 2, got " + std::to_string(m));
    // ways[r] = number of tails so far with sum = r (mod q).
    std::vector<BigInt> ways(static_cast<std::size_t>(q), BigInt(0));
    ways[0] = 1;
    for (int j = 2; j <= m; ++j) {
        std::vector<BigInt> next(static_cast<std::size_t>(q), BigInt(0));
        for (int r = 0; r < q; ++r)
            for (int f = 1; f <= q - 1; ++f)
                next[static_cast<std::size_t>((r + f) % q)] += ways[static_cast<std::size_t>(r)];
        ways = std::move(next);
    }
    PartitionCounts out;
    out.q = q;
    out.m = m;
    out.c_sizes.resize(static_cast<std::size_t>(q));
    for (int v = 1; v <= q; ++v)
        out.c_sizes[static_cast<std::size_t>(v - 1)] = ways[static_cast<std::size_t>(v % q)];
    out.e_size = pow_big(big(q - 1), static_cast<unsigned>(m));
    return out;
}

BigInt c_cardinality(int q, int m, int v)
{
    if (v < 1 || v > q)
        throw ParameterError("residue v must lie in [1, q]");
    return partition_counts(q, m).c_sizes[static_cast<std::size_t>(v - 1)];
}

std::pair<BigInt, BigInt> prop2_values(int q, int m)
{
    need_q(q);
    const BigInt p = pow_big(big(q - 1), static_cast<unsigned>(m - 1));
    if (m % 2 == 0)
        return {(p + 1) / q, (p - q + 1) / q};
    return {(p - 1) / q, (p + q - 1) / q};
}

int exceptional_residue(int q, int m)
{
    const auto counts = partition_counts(q, m);
    for (int v = 1; v <= q; ++v) {
        int same = 0;
        for (int w = 1; w <= q; ++w)
            same += counts.c_sizes[static_cast<std::size_t>(w - 1)] ==
                    counts.c_sizes[static_cast<std::size_t>(v - 1)];
        if (same == 1)
            return v;
    }
    return 0;
}

namespace {

void check_lemma3(int q, const std::vector<int>& residues, const std::vector<int>& f_tail)
{
    need_q(q);
    const int l = static_cast<int>(residues.size());
    if (l < 1 || l > q - 1)
        throw ParameterError("lemma 3 needs 1 <= l <= q-1, got l=" + std::to_string(l));
    std::vector<int> sorted = residues;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParameterError("lemma 3 residues must be distinct");
    for (int r : residues)
        if (r < 1 || r > q)
            throw ParameterError("lemma 3 residues must lie in [1, q]");
    for (int f : f_tail)
        if (f < 1 || f > q - 1)
            throw ParameterError("lemma 3 tail entries must lie in [1, q-1]");
}

long long tail_sum(const std::vector<int>& f_tail)
{
    long long s = 0;
    for (int f : f_tail)
        s += f;
    return s;
}

} // namespace

int lemma3_intersection(int q, int m, const std::vector<int>& residues, const std::vector<int>& f_tail)
{
    check_lemma3(q, residues, f_tail);
    if (static_cast<int>(f_tail.size()) != m - 1)
        throw ParameterError("lemma 3 tail must have m-1 entries");
    const int l = static_cast<int>(residues.size());
    const auto h = residue_q(tail_sum(f_tail), q);
    const bool hit = std::find(residues.begin(), residues.end(), h) != residues.end();
    return hit ? q - l : q - l - 1;
}

int lemma3_brute(int q, const std::vector<int>& residues, const std::vector<int>& f_tail)
{
    check_lemma3(q, residues, f_tail);
    const long long s = tail_sum(f_tail);
    int count = 0;
    for (int f1 = 1; f1 <= q - 1; ++f1) {
        const auto last = residue_q(f1 + s, q);
        if (std::find(residues.begin(), residues.end(), last) == residues.end())
            ++count;
    }
    return count;
}

BigInt geometric_sum(int q, int m)
{
    need_q(q);
    if (m < 1)
        throw ParameterError("geometric sum needs m >= 1");
    BigInt sum = 0;
    for (int u = 1; u <= m; ++u)
        sum += pow_big(big(q - 1), static_cast<unsigned>(u)) * pow_big(big(q), static_cast<unsigned>(m - u));
    const BigInt closed = big(q - 1) * pow_big(big(q), static_cast<unsigned>(m)) -
                          pow_big(big(q - 1), static_cast<unsigned>(m + 1));
    if (sum != closed)
        throw std::logic_error("geometric sum disagrees with its closed form");
    return sum;
}

Rational partition_even_form(int q, int m)
{
    need_q(q);
    const BigInt a = big(q - 1) * pow_big(big(q), static_cast<unsigned>(m));
    const BigInt b = pow_big(big(q - 1), static_cast<unsigned>(m + 1));
    return Rational(a) - make_rational(b, 2) + make_rational(big(q - 1), 2);
}

BigInt partition_ordered_value(int q, int m)
{
    const auto grid = partition_pda({q, m});
    const auto pattern = to_star_pattern(grid);
    return BigInt(eval_ordering(pattern, partition_ordering(q, m)).value);
}

PartitionBound partition_bound_closed(int q, int m)
{
    need_q(q);
    if (m < 2)
        throw ParameterError("partition bound needs m >= 2, got " + std::to_string(m));
    PartitionBound out;
    if (m % 2 == 0) {
        const Rational v = partition_even_form(q, m);
        if (denominator_of(v) != 1)
            throw std::logic_error("even-m partition bound is not an integer");
        out.value = numerator_of(v);
        out.closed_form = true;
        return out;
    }
    out.value = partition_ordered_value(q, m);
    const BigInt a = big(q - 1) * pow_big(big(q), static_cast<unsigned>(m));
    const BigInt b = pow_big(big(q - 1), static_cast<unsigned>(m + 1));
    out.stated_odd_form = Rational(a) - make_rational(b, 2) + make_rational(big(q - 1), big(q));
    return out;
}

BigInt binomial_identity_check(int m, int a, int b)
{
    if (a < 1 || b < 1 || a + b >= m)
        throw ParameterError("binomial identity needs a, b >= 1 and a + b < m");
    using comb::binomial_big;
    const auto u = [](int x) { return static_cast<unsigned>(x); };
    BigInt sum = binomial_big(u(a), u(a)) * binomial_big(u(m - a), u(b));
    for (int i = 0; i <= m - a - b - 1; ++i)
        sum += binomial_big(u(a + i), u(a - 1)) * binomial_big(u(m - a - i - 1), u(b));
    if (sum != binomial_big(u(m), u(a + b)))
        throw std::logic_error("binomial identity failed for m=" + std::to_string(m) + " a=" + std::to_string(a) +
                               " b=" + std::to_string(b));
    return sum;
}

RatioReport ratio_report(int q, int m, bool want_exact, const BoundOptions& options)
{
    need_q(q);
    if (m < 1)
        throw ParameterError("ratio report needs m >= 1");
    RatioReport r;
    r.q = q;
    r.m = m;
    r.s_pda = big(q - 1) * pow_big(big(q), static_cast<unsigned>(m));

    const auto grid = partition_pda({q, m});
    const auto pattern = to_star_pattern(grid);
    r.s_derived = BigInt(eval_ordering(pattern, partition_ordering(q, m)).value);

    const BigInt qm = pow_big(big(q), static_cast<unsigned>(m));
    r.formula_ratio = Rational(1) - make_rational(pow_big(big(q - 1), static_cast<unsigned>(m)), 2 * qm) +
                      make_rational(1, 2 * qm);

    const std::size_t users = static_cast<std::size_t>((m + 1) * q);
    if (r.s_derived == r.s_pda) {
        // The bound is sandwiched between the derived value and S.
        r.s_exact = r.s_derived;
        r.exact_note = "sandwich";
    } else if (!want_exact) {
        r.exact_note = "not requested";
    } else if (users > options.max_exact_users) {
        r.exact_note = "K=" + std::to_string(users) + " above exact cap";
    } else {
        const auto cert = theorem1_exact(pattern, options);
        r.nodes = cert.nodes;
        if (cert.exact) {
            r.s_exact = BigInt(cert.value);
            r.exact_note = "search";
        } else {
            r.exact_note = "budget exceeded";
        }
    }
    if (r.s_exact)
        r.mu = make_rational(*r.s_exact, r.s_derived);
    return r;
}

std::string ratio_csv_header()
{
    return "q,m,s_pda,s_derived,s_exact,mu,formula_ratio";
}

std::string ratio_csv_row(const RatioReport& r)
{
    char mu[32] = "";
    if (r.mu)
        std::snprintf(mu, sizeof mu, "%.6f", to_double(*r.mu));
    char fr[32];
    std::snprintf(fr, sizeof fr, "%.6f", to_double(r.formula_ratio));
    return std::to_string(r.q) + "," + std::to_string(r.m) + "," + r.s_pda.str() + "," + r.s_derived.str() + "," +
           (r.s_exact ? r.s_exact->str() : std::string()) + "," + mu + "," + fr;
}

} // namespace pdaw
