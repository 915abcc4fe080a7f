#pragma once

#include "flowvol/compositions.hpp"
#include "flowvol/graph.hpp"
#include "flowvol/numbers.hpp"
#include "flowvol/poly.hpp"

#include <vector>

namespace flowvol {

// One summand of the Lidskii formulas, indexed by a dominance composition j
// of m-n. The kpf factor kpf(G, (j-out, 0)) is shared by the volume and both
// lattice point formulas, so all three evaluate from one table.
struct LidskiiTerm {
    std::vector<long long> j;
    Int multinomial_factor;  // multinomial(m-n; j)
    Int kpf_factor;          // kpf(G, (j - out, 0))
};

struct LidskiiTermTable {
    long long total = 0;             // m - n
    std::vector<long long> out, in;  // shifted degrees of vertices 1..n
    std::vector<LidskiiTerm> terms;  // ascending lexicographic j
};

// Builds the shared term table; requires every vertex 1..n to have an
// outgoing edge.
LidskiiTermTable lidskii_terms(const MultiDigraph& g);

// Per-term values aligned with table.terms.
std::vector<Int> lidskii_volume_terms(const LidskiiTermTable& table, const Netflow& a);
std::vector<Int> lidskii_points_binomial_terms(const LidskiiTermTable& table, const Netflow& a);
std::vector<Int> lidskii_points_multiset_terms(const LidskiiTermTable& table, const Netflow& a);

// vol F_G(a) = sum_j multinomial(m-n; j) prod_i a_i^{j_i} kpf(G, (j-out, 0)),
// with 0^0 = 1 so zero netflow entries kill exactly the terms with j_i > 0.
Int lidskii_volume(const MultiDigraph& g, const Netflow& a);

// The same sum left as an exact polynomial in a1..an, homogeneous of degree m-n.
ExactPoly lidskii_volume_poly(const MultiDigraph& g);

// kpf(G, a_full) = sum_j prod_i binomial(a_i + out_i, j_i) kpf(G, (j-out, 0)).
Int lidskii_points_binomial(const MultiDigraph& g, const Netflow& a);

// kpf(G, a_full) = sum_j prod_i multiset_number(a_i - in_i, j_i) kpf(G, (j-out, 0)).
Int lidskii_points_multiset(const MultiDigraph& g, const Netflow& a);

// Indegree volume formula: vol F_G(sum b, -b_1, ..., -b_n) as the sum over
// compositions j of m-n below (in_2, ..., in_{n+1}) in dominance order of
// multinomial(m-n; j) prod_i b_i^{j_i} kpf(G, (0, in_2-j_1, ..., in_{n+1}-j_n)).
// Requires every vertex 2..n+1 to have an incoming edge.
Int volume_indegree(const MultiDigraph& g, const std::vector<long long>& b);

// kpf(G, (sum b, -b_1, ..., -b_n)) computed through the reversal symmetry:
// apply the binomial point formula to the reversed graph with reversed b.
Int points_indegree(const MultiDigraph& g, const std::vector<long long>& b);

// vol F_G(1, 0, ..., 0, -1) along with the two Kostant evaluations it equals:
// kpf(G, (m-n-out_1, -out_2, ..., -out_n, 0)) and
// kpf(G, (0, in_2, ..., in_n, -(m-n)+in_{n+1})).
struct UnitVolumeIdentities {
    Int volume, rhs_out, rhs_in;
};

UnitVolumeIdentities unit_volume_identities(const MultiDigraph& g);

}  // namespace flowvol
