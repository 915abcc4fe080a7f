#pragma once

#include "flowvol/graph.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/numbers.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flowvol {

// Noncrossing tree on l left and r right vertices, encoded by the composition
// comp of r-1 into l parts where comp[k] = degree(k-th left vertex) - 1.
// Left vertex k covers a block of consecutive right vertices; adjacent blocks
// share one right vertex. There are binomial(l+r-2, l-1) such trees.
struct NoncrossingTree {
    long long left_size = 0;
    long long right_size = 0;
    std::vector<long long> comp;

    bool operator==(const NoncrossingTree& other) const {
        return left_size == other.left_size && right_size == other.right_size &&
               comp == other.comp;
    }
};

// All trees in ascending lexicographic comp order; l, r >= 1.
std::vector<NoncrossingTree> noncrossing_trees(long long l, long long r);
Int noncrossing_tree_count(long long l, long long r);

// Basic reduction on in-edge e1 = (a, i) and out-edge e2 = (i, b), addressed
// by edge index. Both results append the composite edge (a, b) last:
// first drops (i, b), second drops (a, i).
std::pair<MultiDigraph, MultiDigraph> basic_reduction(const MultiDigraph& g, std::size_t e1,
                                                      std::size_t e2);

// Compounded reduction at vertex i (1 < i <= n): composes every in-edge of i
// with the out-edges of i along the noncrossing tree T. Left vertices are the
// in-edges in insertion order; when a_i_positive an extra left vertex
// standing for vertex i itself is ordered last and its block of out-edges is
// kept in place. When !a_i_positive a fresh zero-flow edge (i, n+1) is
// appended instead. Surviving edges keep their order; composites follow in
// left-major block order.
MultiDigraph compounded_reduction(const MultiDigraph& g, int i, bool a_i_positive,
                                  const NoncrossingTree& t);

// One cell of the canonical census, identified by its signature m (all parts
// >= 1, summing to the edge count).
struct CellSpec {
    std::vector<long long> m;
    Int multiplicity;           // kpf(G, (m - outd, 0))
    Int volume_term;            // cell_volume(m, a)
    Int points_term_binomial;   // prod_i binomial(a_i + outd_i - 1, m_i - 1)
    Int points_term_multiset;   // prod_i multiset_number(a_i - ind_i + 1, m_i - 1)
};

// Normalized volume of the cell with signature m at netflow a:
// multinomial(sum(m_i - 1); m_1 - 1, ..., m_n - 1) * prod_i a_i^{m_i - 1}.
Int cell_volume(const std::vector<long long>& m, const Netflow& a);

// Formula-based census: one CellSpec per dominance composition m = j + 1 with
// j >= out, restricted to j_i = 0 wherever a_i = 0. Multiplicities may be 0.
std::vector<CellSpec> ccrt_cells(const MultiDigraph& g, const Netflow& a);

// Correspondence between integral flows with netflow (m - outd, 0) and the
// tuples of noncrossing trees (T_2, ..., T_n) chosen along the reduction path
// to the cell G(m): in-edge entries of each composition carry the flow values
// and the last entry is m_i - 1. Index k of the result is vertex k+2.
std::vector<NoncrossingTree> phi_bijection(const MultiDigraph& g, const std::vector<long long>& m,
                                           const FlowAssignment& flow);
FlowAssignment psi_inverse(const MultiDigraph& g, const std::vector<NoncrossingTree>& trees);

// Number of cells M = sum over dominance compositions j of kpf(G, (j-out, 0)).
Int num_cells(const MultiDigraph& g);

// The five agreeing cell-count computations. The explicit count walks the
// whole reduction tree and is omitted when it would exceed `explicit_cap`
// leaves.
struct CellCountCrosschecks {
    Int formula_sum;                    // sum_j kpf(G, (j - out, 0))
    Int kpf_star;                       // kpf(G*, (m-n, -out_1, ..., -out_n, 0))
    Int volume_star;                    // lidskii_volume(G*, e_1)
    Int volume_circ;                    // lidskii_volume(G~, e_1)
    std::optional<Int> explicit_count;  // leaves of the explicit reduction tree
    bool all_equal = false;
};

CellCountCrosschecks num_cells_crosschecks(const MultiDigraph& g,
                                           std::size_t explicit_cap = 100000);

// Number of cell types N as the determinant
// det[ binomial(out_{i+1} + ... + out_n + 1, i - j + 1) ], i, j = 1..n-1,
// and independently as the number of dominance compositions.
Int num_cell_types(const MultiDigraph& g);
Int num_cell_types_enumerated(const MultiDigraph& g);

// Node of a reduction tree. Provenance records which original edges each
// edge formally sums (shared summands appear in several composites); fresh
// marks the zero-flow edges added by the a_i = 0 case. The monomial entries
// are monomial_out[v] = outd_v(H) - outd_v(G) and
// monomial_in[v] = ind_v(G) - ind_v(H) for the node graph H.
struct ReductionNode {
    MultiDigraph graph;
    std::vector<std::vector<std::size_t>> provenance;
    std::vector<bool> fresh;
    std::vector<long long> monomial_out, monomial_in;  // length n+1
    int depth = 0;
    int reduced_vertex = 0;  // vertex processed to create this node, 0 at root
    std::ptrdiff_t parent = -1;
    std::vector<std::size_t> children;
    bool leaf = false;
    bool full_dimensional = false;
    int violated_vertex = 0;  // vertex with incoming but no outgoing edges, 0 if none
};

struct ReductionTree {
    std::string kind;  // "brt" or "ccrt"
    std::vector<ReductionNode> nodes;  // preorder, node 0 is the root
    bool truncated = false;
};

// Binary reduction tree: processes the highest vertex that still has both
// incoming and outgoing edges, pairing the longest in-edge (smallest source,
// then insertion order) with the longest out-edge (largest target, then
// insertion order). Leaves either have the sink form G(m) (full dimensional)
// or contain a vertex with incoming but no outgoing edges.
ReductionTree build_brt(const MultiDigraph& g, std::size_t node_cap = 100000);

// Compounded reduction tree over vertices n..2, branching over all admissible
// noncrossing trees; vertices without incoming edges are skipped. Only the
// zero pattern of a matters.
ReductionTree build_ccrt(const MultiDigraph& g, const Netflow& a, std::size_t node_cap = 100000);

enum class ContributionMode { Out, In };

// Leaf summary of the binary reduction tree with the closed-form point count
// contribution at netflow a; m is the leaf's outdegree signature. Lower
// dimensional leaves contribute exactly 0 in either mode.
struct BrtLeaf {
    std::size_t node = 0;
    std::vector<long long> m;
    bool full_dimensional = false;
    int violated_vertex = 0;
    Int contribution;
};

std::vector<BrtLeaf> brt_leaves(const MultiDigraph& g, const Netflow& a, ContributionMode mode,
                                std::size_t node_cap = 100000);

// Leaf signatures (outdegree vectors of vertices 1..n) of an explicit tree.
std::vector<std::vector<long long>> tree_leaf_signatures(const ReductionTree& tree);

std::string tree_to_json(const ReductionTree& tree);
std::string tree_to_dot(const ReductionTree& tree);

}  // namespace flowvol
