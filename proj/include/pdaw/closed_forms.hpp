#pragma once

// Closed-form quantities for the partition and bipartite PDA bounds, each
// computed exactly (big integers / rationals) and paired with a direct
// evaluation it is checked against.

#include "pdaw/bound/theorem1.hpp"
#include "pdaw/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pdaw {

/// (q - z) q^(z-1) / (q - 1)^z. Throws ParameterError for q <= 1 or z < 1.
Rational phi(int q, int z);

/**
 * C_v = {(f_2..f_m) in [q-1]^(m-1) : <f_2 + ... + f_m>_q = v}, counted for
 * every v by a dynamic program over residues. e_size = (q-1)^m.
 */
struct PartitionCounts {
    int q = 0;
    int m = 0;
    std::vector<BigInt> c_sizes;  // index v-1
    BigInt e_size;
};

PartitionCounts partition_counts(int q, int m);
BigInt c_cardinality(int q, int m, int v);

/**
 * The two count values and their multiplicities as stated in closed form:
 * m even: (q-1) residues of ((q-1)^(m-1) + 1)/q, one of ((q-1)^(m-1) - q + 1)/q;
 * m odd:  (q-1) residues of ((q-1)^(m-1) - 1)/q, one of ((q-1)^(m-1) + q - 1)/q.
 * Returned as {common value, exceptional value}.
 */
std::pair<BigInt, BigInt> prop2_values(int q, int m);

/// The residue whose |C_v| differs from the other q-1, found by counting
/// (0 when all counts agree, which happens only for q = 2).
int exceptional_residue(int q, int m);

/**
 * |A_{m+1,i_1} n ... n A_{m+1,i_l} n F_{f_2..f_m}|: q - l if the tail sum's
 * residue is one of the i's, q - l - 1 otherwise. Throws ParameterError for
 * repeated residues, l outside [1, q-1], or tail entries outside [q-1].
 */
int lemma3_intersection(int q, int m, const std::vector<int>& residues, const std::vector<int>& f_tail);

/// Direct count of the same set over f_1 in [q-1].
int lemma3_brute(int q, const std::vector<int>& residues, const std::vector<int>& f_tail);

/// sum_{u=1}^{m} (q-1)^u q^(m-u); throws std::logic_error unless it equals
/// (q-1) q^m - (q-1)^(m+1).
BigInt geometric_sum(int q, int m);

struct PartitionBound {
    BigInt value;
    /// True when value came from the even-m closed form, false when it is
    /// the prescribed-ordering evaluation (odd m).
    bool closed_form = false;
    /// The odd-m display (q-1)q^m - (q-1)^(m+1)/2 + (q-1)/q, reported for
    /// comparison only; it is not a symbol count in general.
    std::optional<Rational> stated_odd_form;
};

/// (q-1)q^m - (q-1)^(m+1)/2 + (q-1)/2, exact.
Rational partition_even_form(int q, int m);

/// eval_ordering(partition pattern, partition_ordering). Needs q^m <= PDAW_MAX_ROWS.
BigInt partition_ordered_value(int q, int m);

PartitionBound partition_bound_closed(int q, int m);

/// C(a,a)C(m-a,b) + sum_{i=0}^{m-a-b-1} C(a+i,a-1) C(m-a-i-1,b); throws
/// std::logic_error unless it equals C(m, a+b).
BigInt binomial_identity_check(int m, int a, int b);

struct RatioReport {
    int q = 0;
    int m = 0;
    BigInt s_pda;
    BigInt s_derived;
    std::optional<BigInt> s_exact;
    /// How s_exact was obtained: "search", "sandwich" (s_derived == s_pda),
    /// or the reason it is absent.
    std::string exact_note;
    std::optional<Rational> mu;  // s_exact / s_derived
    Rational formula_ratio;      // 1 - ((q-1)/q)^m / 2 + 1/(2 q^m)
    std::uint64_t nodes = 0;
};

/// Exact search runs only when want_exact and (m+1)q <= options.max_exact_users.
RatioReport ratio_report(int q, int m, bool want_exact, const BoundOptions& options = {});

/// "q,m,s_pda,s_derived,s_exact,mu,formula_ratio"
std::string ratio_csv_header();
std::string ratio_csv_row(const RatioReport& r);

} // namespace pdaw
