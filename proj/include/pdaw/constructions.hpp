#pragma once

#include "pdaw/core/pda_grid.hpp"

#include <cstdint>
#include <vector>

namespace pdaw {

/// <x>_q: x mod q mapped into {1, ..., q} (a multiple of q gives q).
/// Throws ParameterError for q <= 0.
std::int64_t residue_q(std::int64_t x, std::int64_t q);

struct PartitionSpec {
    int q = 2;  // alphabet size, >= 2
    int m = 1;  // vector length, >= 1
};

struct BipartiteSpec {
    int m = 3;
    int a = 1;
    int b = 1;  // a + b < m
    int h = 1;  // copies; 1 = plain bipartite
};

/**
 * Partition PDA with parameters ((m+1)q, q^m, q^(m-1), (q-1)q^m).
 *
 * Rows are the codewords f = (f_1..f_m, <sum f_i>_q), listed with f_1
 * varying fastest. Columns are (u, v), u in [m+1], v in [q], in row-major
 * order. Cell (f, (u,v)) is a star iff f_u = v; otherwise its label is f with
 * coordinate u replaced by v (a non-codeword), and labels become dense ids in
 * order of first appearance in a row-major scan.
 */
PdaGrid partition_pda(const PartitionSpec& spec);

/// Row label of partition row `row` (0-based): (f_1, ..., f_m, f_{m+1}).
std::vector<int> partition_row_label(const PartitionSpec& spec, std::size_t row);

/**
 * Bipartite graph PDA (h must be 1): rows are the b-subsets of [m], columns
 * the a-subsets, both in lexicographic order. Cell (B, C) is a star iff B and
 * C intersect; otherwise it carries the (a+b)-set B u C, relabelled to dense
 * ids by first appearance.
 */
PdaGrid bipartite_pda(const BipartiteSpec& spec);

/// MN PDA for K users and cache parameter t (1 <= t < K): the bipartite PDA
/// with m = K, a = 1, b = t. Parameters (K, C(K,t), C(K-1,t-1), C(K,t+1)).
PdaGrid mn_pda(int users, int t);

/// h side-by-side copies of the bipartite PDA, copy i shifted by (i-1)C(m,a+b).
PdaGrid grouping_pda(const BipartiteSpec& spec);

} // namespace pdaw
