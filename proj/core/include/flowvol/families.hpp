#pragma once

#include "flowvol/graph.hpp"
#include "flowvol/numbers.hpp"

#include <map>
#include <vector>

namespace flowvol {

// Catalan number C_k = binomial(2k, k) / (k + 1).
Int catalan(long long k);

// Number of standard Young tableaux of staircase shape (n-1, n-2, ..., 1),
// by the hook-length rule; 1 for n <= 1.
Int hook_staircase(long long n);

// Brute-force tableau count for the same shape, for cross-checking the
// hook-length rule on small n.
Int staircase_syt_count(long long n);

// vol F_{k_{n+1}}(1, 0, ..., 0, -1) = C_0 C_1 ... C_{n-2}; n >= 2.
Int cry_volume(long long n);

// vol F_{k_{n+1}}(1, 1, ..., 1, -n) = hook_staircase(n) * C_0 C_1 ... C_{n-1};
// n >= 1.
Int tesler_volume(long long n);

// vol F_{k_{n+1}}(1, 1, 0, ..., 0, -2) = 2^{binom(n,2)-1} C_0 C_1 ... C_{n-2};
// n >= 2.
Int ckm_volume(long long n);

// vol F_{Pi_n}(a) = sum over compositions j of n dominating (1, ..., 1) of
// multinomial(n; j) prod_i a_i^{j_i}; the sum has C_n terms.
Int ps_volume(const std::vector<long long>& a);

// Lattice points of the Pitman-Stanley polytope PS_n(a) as the determinant
// det[ binomial(a_1 + ... + a_{n-i+1} + 1, i - j + 1) ], i, j = 1..n; equals
// kpf(Pi_n, a_full) for nonnegative a. The empty vector yields 1.
Int ps_lattice_count(const std::vector<long long>& a);

// Parking functions of length n over 1..n (sorted entries s_i <= i), in
// ascending lexicographic order; there are (n+1)^{n-1} of them.
std::vector<std::vector<int>> parking_functions(long long n);

// sum over parking functions (k_1, ..., k_n) of prod_i a_{k_i}, n = a.size();
// equals ps_volume(a).
Int ps_word_volume(const std::vector<long long>& a);

// Word expansion of the volume: m(w) = kpf(G, (j - out, 0)) where j_k counts
// the letter k in w, over words of length m-n with content dominating out.
// Only words with m(w) > 0 are kept.
struct WordExpansion {
    std::map<std::vector<int>, Int> entries;
};

WordExpansion words_expansion(const MultiDigraph& g);

// sum of the multiplicities of words_expansion(g); equals
// lidskii_volume(g, (1, ..., 1)).
Int words_total(const MultiDigraph& g);

// Closed forms for F_{Pi_n(c)}(a), n = c.size() = a.size(): the Kostant
// factor of every summand is 1, so the sums run over compositions j of
// sum(c) dominating c with
//   volume term multinomial(sum c; j) prod_i a_i^{j_i},
//   binomial point term prod_i binomial(a_i + c_i, j_i),
//   multiset point term multiset(a_1 + 1, j_1) prod_{i>=2} multiset(a_i, j_i).
// Both point sums equal kpf(Pi_n(c), a_full).
Int pic_volume(const std::vector<long long>& c, const std::vector<long long>& a);
Int pic_points_binomial(const std::vector<long long>& c, const std::vector<long long>& a);
Int pic_points_multiset(const std::vector<long long>& c, const std::vector<long long>& a);

// vol F_{Pi_n(c)*}(1, 0, ..., 0, -1) = ps_lattice_count((c_n, ..., c_2)),
// independent of c_1; n = c.size(), 1 for n = 1.
Int pic_star_volume(const std::vector<long long>& c);

// (1/n!) (c+1) (c+nd+2) (c+nd+3) ... (c+nd+n), the block evaluation of
// pic_star_volume for a netflow-reversed profile (c, d, d, ..., d); equals
// ps_lattice_count((c, d, ..., d)) with n entries. Requires n >= 1.
Int ps_block_product(long long c, long long d, long long n);

// True when the Ehrhart polynomial of F_{Pi_n(c)}(a) has constant term 1 and
// every coefficient up to its degree positive, and its values agree with the
// direct dilate counts for t = 0..t_max.
bool ehrhart_positivity_check(const std::vector<long long>& c, const std::vector<long long>& a,
                              long long t_max);

}  // namespace flowvol
