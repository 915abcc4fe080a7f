#include "flowvol/subdivision.hpp"

#include "flowvol/error.hpp"
#include "flowvol/lidskii.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace flowvol {

namespace {

void require_outgoing(const MultiDigraph& g) {
    if (!g.has_outgoing_all())
        fail(ErrorKind::MissingOutgoingEdge, "every vertex 1..n needs an outgoing edge");
}

void check_signature_length(const MultiDigraph& g, std::size_t len) {
    if (len != static_cast<std::size_t>(g.n()))
        fail(ErrorKind::BadParams, "signature must have one entry per non-sink vertex");
}

}  // namespace

std::vector<NoncrossingTree> noncrossing_trees(long long l, long long r) {
    if (l < 1 || r < 1) fail(ErrorKind::BadParams, "noncrossing trees need l, r >= 1");
    std::vector<NoncrossingTree> trees;
    const std::vector<long long> zeros(static_cast<std::size_t>(l), 0);
    for (auto& comp : dominance_compositions(zeros, r - 1))
        trees.push_back({l, r, std::move(comp)});
    return trees;
}

Int noncrossing_tree_count(long long l, long long r) {
    if (l < 1 || r < 1) fail(ErrorKind::BadParams, "noncrossing trees need l, r >= 1");
    return binomial(Int(l + r - 2), l - 1);
}

std::pair<MultiDigraph, MultiDigraph> basic_reduction(const MultiDigraph& g, std::size_t e1,
                                                      std::size_t e2) {
    if (e1 >= g.edge_count() || e2 >= g.edge_count())
        fail(ErrorKind::BadParams, "edge index out of range");
    const auto& [a, i] = g.edge(e1);
    const auto& [i2, b] = g.edge(e2);
    if (i != i2) {
        std::ostringstream os;
        os << "edges " << a << "-" << i << " and " << i2 << "-" << b
           << " do not share a middle vertex";
        fail(ErrorKind::EdgesNotComposable, os.str());
    }

    std::vector<std::pair<int, int>> first, second;
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
        if (idx != e2) first.push_back(g.edge(idx));
        if (idx != e1) second.push_back(g.edge(idx));
    }
    first.emplace_back(a, b);
    second.emplace_back(a, b);
    return {MultiDigraph(g.n(), std::move(first)), MultiDigraph(g.n(), std::move(second))};
}

namespace {

// Graph plus the per-edge bookkeeping carried through a reduction tree.
struct AnnotatedGraph {
    MultiDigraph graph;
    std::vector<std::vector<std::size_t>> provenance;
    std::vector<bool> fresh;
};

AnnotatedGraph annotate_root(const MultiDigraph& g) {
    std::vector<std::vector<std::size_t>> prov(g.edge_count());
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) prov[idx] = {idx};
    return {g, std::move(prov), std::vector<bool>(g.edge_count(), false)};
}

std::vector<std::size_t> merge_provenance(const std::vector<std::size_t>& x,
                                          const std::vector<std::size_t>& y) {
    std::vector<std::size_t> merged;
    merged.reserve(x.size() + y.size());
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(merged));
    return merged;
}

void check_tree_shape(const NoncrossingTree& t, long long l, long long r) {
    bool ok = t.left_size == l && t.right_size == r &&
              t.comp.size() == static_cast<std::size_t>(l);
    long long sum = 0;
    for (long long c : t.comp) {
        if (c < 0) ok = false;
        sum += c;
    }
    if (ok && sum != r - 1) ok = false;
    if (!ok) {
        std::ostringstream os;
        os << "tree does not fit left size " << l << " and right size " << r;
        fail(ErrorKind::TreeShapeMismatch, os.str());
    }
}

AnnotatedGraph compounded_reduction_impl(const AnnotatedGraph& node, int i, bool a_i_positive,
                                         const NoncrossingTree& t) {
    const MultiDigraph& g = node.graph;
    if (i < 2 || i > g.n()) fail(ErrorKind::BadParams, "reduction vertex must lie in 2..n");
    const auto& in_idx = g.in_edges(i);
    const auto& out_idx = g.out_edges(i);
    if (in_idx.empty()) fail(ErrorKind::NoIncomingEdges, "vertex has no incoming edges to reduce");
    if (out_idx.empty())
        fail(ErrorKind::TreeShapeMismatch, "vertex has no outgoing edges to compose");
    const long long l = static_cast<long long>(in_idx.size()) + (a_i_positive ? 1 : 0);
    const long long r = static_cast<long long>(out_idx.size());
    check_tree_shape(t, l, r);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::size_t>> provenance;
    std::vector<bool> fresh;
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
        const auto& [u, w] = g.edge(idx);
        if (u == i || w == i) continue;
        edges.push_back(g.edge(idx));
        provenance.push_back(node.provenance[idx]);
        fresh.push_back(node.fresh[idx]);
    }
    // Composite edges in left-major block order; adjacent blocks share one
    // right vertex.
    std::size_t start = 0;
    for (long long k = 0; k < l; ++k) {
        const bool is_vertex_block = a_i_positive && k + 1 == l;
        const std::size_t width = static_cast<std::size_t>(t.comp[static_cast<std::size_t>(k)]) + 1;
        for (std::size_t s = start; s < start + width; ++s) {
            const std::size_t out_edge = out_idx[s];
            const int head = g.edge(out_edge).second;
            if (is_vertex_block) {
                edges.emplace_back(i, head);
                provenance.push_back(node.provenance[out_edge]);
                fresh.push_back(node.fresh[out_edge]);
            } else {
                const std::size_t in_edge = in_idx[static_cast<std::size_t>(k)];
                edges.emplace_back(g.edge(in_edge).first, head);
                provenance.push_back(
                    merge_provenance(node.provenance[in_edge], node.provenance[out_edge]));
                fresh.push_back(false);
            }
        }
        start += width - 1;
    }
    if (!a_i_positive) {
        edges.emplace_back(i, g.n() + 1);
        provenance.emplace_back();
        fresh.push_back(true);
    }
    return {MultiDigraph(g.n(), std::move(edges)), std::move(provenance), std::move(fresh)};
}

}  // namespace

MultiDigraph compounded_reduction(const MultiDigraph& g, int i, bool a_i_positive,
                                  const NoncrossingTree& t) {
    return compounded_reduction_impl(annotate_root(g), i, a_i_positive, t).graph;
}

Int cell_volume(const std::vector<long long>& m, const Netflow& a) {
    if (m.size() != a.size())
        fail(ErrorKind::BadParams, "signature and netflow lengths must match");
    std::vector<long long> shifted;
    shifted.reserve(m.size());
    long long total = 0;
    for (long long part : m) {
        if (part < 1) fail(ErrorKind::ZeroPart, "cell signature parts must be >= 1");
        shifted.push_back(part - 1);
        total += part - 1;
    }
    Int value = multinomial(total, shifted);
    for (std::size_t i = 0; i < m.size(); ++i) value *= int_pow(Int(a[i]), m[i] - 1);
    return value;
}

std::vector<CellSpec> ccrt_cells(const MultiDigraph& g, const Netflow& a) {
    require_outgoing(g);
    check_signature_length(g, a.size());
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);
    const long long total = static_cast<long long>(g.edge_count()) - n;
    const std::vector<long long> out(deg.out.begin(), deg.out.begin() + n);
    const std::vector<long long> in(deg.in.begin(), deg.in.begin() + n);

    std::vector<CellSpec> cells;
    for (const auto& j : dominance_compositions(out, total)) {
        bool admissible = true;
        for (std::size_t i = 0; i < j.size(); ++i)
            if (a[i] == 0 && j[i] > 0) admissible = false;
        if (!admissible) continue;

        CellSpec cell;
        cell.m.reserve(j.size());
        for (long long ji : j) cell.m.push_back(ji + 1);

        std::vector<long long> netflow(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t i = 0; i < j.size(); ++i) netflow[i] = j[i] - out[i];
        cell.multiplicity = kpf(g, netflow);
        cell.volume_term = cell_volume(cell.m, a);
        cell.points_term_binomial = 1;
        cell.points_term_multiset = 1;
        for (std::size_t i = 0; i < j.size(); ++i) {
            cell.points_term_binomial *= binomial(Int(a[i] + out[i]), j[i]);
            cell.points_term_multiset *= multiset_number(Int(a[i] - in[i]), j[i]);
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

std::vector<NoncrossingTree> phi_bijection(const MultiDigraph& g, const std::vector<long long>& m,
                                           const FlowAssignment& flow) {
    check_signature_length(g, m.size());
    if (flow.size() != g.edge_count())
        fail(ErrorKind::BadParams, "flow assignment must have one entry per edge");
    for (long long f : flow)
        if (f < 0) fail(ErrorKind::NetflowMismatch, "flow entries must be nonnegative");
    for (long long part : m)
        if (part < 1) fail(ErrorKind::BadParams, "cell signature parts must be >= 1");

    const std::vector<long long> actual = netflow_of(g, flow);
    for (int v = 1; v <= g.n() + 1; ++v) {
        const long long expected =
            v <= g.n() ? m[static_cast<std::size_t>(v - 1)] - g.outdeg(v) : 0;
        if (actual[static_cast<std::size_t>(v - 1)] != expected)
            fail(ErrorKind::NetflowMismatch, "flow netflow does not equal (m - outd, 0)");
    }

    std::vector<NoncrossingTree> trees;
    for (int i = 2; i <= g.n(); ++i) {
        NoncrossingTree t;
        for (std::size_t e : g.in_edges(i)) t.comp.push_back(flow[e]);
        t.comp.push_back(m[static_cast<std::size_t>(i - 1)] - 1);
        t.left_size = static_cast<long long>(t.comp.size());
        t.right_size = 1 + std::accumulate(t.comp.begin(), t.comp.end(), 0LL);
        trees.push_back(std::move(t));
    }
    return trees;
}

FlowAssignment psi_inverse(const MultiDigraph& g, const std::vector<NoncrossingTree>& trees) {
    if (trees.size() + 1 != static_cast<std::size_t>(g.n()))
        fail(ErrorKind::TreeShapeMismatch, "expected one tree per vertex 2..n");
    FlowAssignment flow(g.edge_count(), 0);
    for (int i = 2; i <= g.n(); ++i) {
        const NoncrossingTree& t = trees[static_cast<std::size_t>(i - 2)];
        check_tree_shape(t, t.left_size, t.right_size);
        if (t.left_size != g.indeg(i) + 1)
            fail(ErrorKind::TreeShapeMismatch, "tree left size must be indeg + 1");
        const auto& in_idx = g.in_edges(i);
        for (std::size_t k = 0; k < in_idx.size(); ++k) flow[in_idx[k]] = t.comp[k];
    }
    // The right size must be the out-degree grown by the flow routed through.
    for (int i = 2; i <= g.n(); ++i) {
        long long routed = 0;
        for (std::size_t e : g.out_edges(i))
            if (g.edge(e).second <= g.n()) routed += flow[e];
        if (trees[static_cast<std::size_t>(i - 2)].right_size != g.outdeg(i) + routed)
            fail(ErrorKind::TreeShapeMismatch, "tree right size is inconsistent with the flow");
    }
    return flow;
}

Int num_cells(const MultiDigraph& g) {
    require_outgoing(g);
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);
    const long long total = static_cast<long long>(g.edge_count()) - n;
    const std::vector<long long> out(deg.out.begin(), deg.out.begin() + n);

    Int count = 0;
    for (const auto& j : dominance_compositions(out, total)) {
        std::vector<long long> netflow(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t i = 0; i < j.size(); ++i) netflow[i] = j[i] - out[i];
        count += kpf(g, netflow);
    }
    return count;
}

CellCountCrosschecks num_cells_crosschecks(const MultiDigraph& g, std::size_t explicit_cap) {
    require_outgoing(g);
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);
    const long long total = static_cast<long long>(g.edge_count()) - n;

    CellCountCrosschecks checks;
    checks.formula_sum = num_cells(g);

    const MultiDigraph star = star_graph(g);
    std::vector<long long> star_netflow(static_cast<std::size_t>(n) + 2, 0);
    star_netflow[0] = total;
    for (int i = 0; i < n; ++i) star_netflow[static_cast<std::size_t>(i) + 1] = -deg.out[static_cast<std::size_t>(i)];
    checks.kpf_star = kpf(star, star_netflow);

    std::vector<long long> unit_star(static_cast<std::size_t>(star.n()), 0);
    unit_star[0] = 1;
    checks.volume_star = lidskii_volume(star, Netflow(unit_star));

    const MultiDigraph circ = circ_graph(g);
    std::vector<long long> unit_circ(static_cast<std::size_t>(circ.n()), 0);
    unit_circ[0] = 1;
    checks.volume_circ = lidskii_volume(circ, Netflow(unit_circ));

    const ReductionTree tree =
        build_ccrt(g, Netflow(std::vector<long long>(static_cast<std::size_t>(n), 1)),
                   explicit_cap);
    if (!tree.truncated) {
        Int leaves = 0;
        for (const auto& node : tree.nodes)
            if (node.leaf) ++leaves;
        checks.explicit_count = leaves;
    }

    checks.all_equal = checks.formula_sum == checks.kpf_star &&
                       checks.formula_sum == checks.volume_star &&
                       checks.formula_sum == checks.volume_circ &&
                       (!checks.explicit_count || *checks.explicit_count == checks.formula_sum);
    return checks;
}

Int num_cell_types(const MultiDigraph& g) {
    require_outgoing(g);
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);

    // Suffix sums out_{i+1} + ... + out_n over shifted outdegrees.
    std::vector<std::vector<Int>> matrix;
    for (int i = 1; i <= n - 1; ++i) {
        long long suffix = 0;
        for (int k = i + 1; k <= n; ++k) suffix += deg.out[static_cast<std::size_t>(k - 1)];
        std::vector<Int> row;
        for (int j = 1; j <= n - 1; ++j) row.push_back(binomial(Int(suffix + 1), i - j + 1));
        matrix.push_back(std::move(row));
    }
    return bareiss_determinant(std::move(matrix));
}

Int num_cell_types_enumerated(const MultiDigraph& g) {
    require_outgoing(g);
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);
    const long long total = static_cast<long long>(g.edge_count()) - n;
    const std::vector<long long> out(deg.out.begin(), deg.out.begin() + n);
    return Int(dominance_compositions(out, total).size());
}

namespace {

std::vector<long long> degree_difference(const MultiDigraph& root, const MultiDigraph& node,
                                         bool outgoing) {
    std::vector<long long> diff;
    diff.reserve(static_cast<std::size_t>(root.vertex_count()));
    for (int v = 1; v <= root.vertex_count(); ++v)
        diff.push_back(outgoing ? node.outdeg(v) - root.outdeg(v)
                                : root.indeg(v) - node.indeg(v));
    return diff;
}

// Vertex classification shared by both tree builders: the next vertex to
// reduce is the highest one with both incoming and outgoing edges; a leaf
// with a vertex that kept incoming edges but lost all outgoing ones is lower
// dimensional.
int active_vertex(const MultiDigraph& g) {
    for (int v = g.n(); v >= 2; --v)
        if (g.indeg(v) > 0 && g.outdeg(v) > 0) return v;
    return 0;
}

int violation_vertex(const MultiDigraph& g) {
    for (int v = 2; v <= g.n(); ++v)
        if (g.indeg(v) > 0 && g.outdeg(v) == 0) return v;
    return 0;
}

void classify_leaf(ReductionNode& node) {
    node.leaf = true;
    node.violated_vertex = violation_vertex(node.graph);
    node.full_dimensional = node.violated_vertex == 0;
}

ReductionNode make_node(AnnotatedGraph ag, const MultiDigraph& root, int depth,
                        int reduced_vertex, std::ptrdiff_t parent) {
    ReductionNode node{std::move(ag.graph), std::move(ag.provenance), std::move(ag.fresh),
                       {},  {}, depth, reduced_vertex, parent, {}, false, false, 0};
    node.monomial_out = degree_difference(root, node.graph, true);
    node.monomial_in = degree_difference(root, node.graph, false);
    return node;
}

}  // namespace

ReductionTree build_brt(const MultiDigraph& g, std::size_t node_cap) {
    require_outgoing(g);
    ReductionTree tree;
    tree.kind = "brt";
    tree.nodes.push_back(make_node(annotate_root(g), g, 0, 0, -1));

    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        const std::size_t idx = stack.back();
        stack.pop_back();
        const int v = active_vertex(tree.nodes[idx].graph);
        if (v == 0) {
            classify_leaf(tree.nodes[idx]);
            continue;
        }
        if (tree.nodes.size() + 2 > node_cap) {
            tree.truncated = true;
            continue;
        }
        // Copy before push_back below invalidates references into tree.nodes.
        const AnnotatedGraph parent_ag{tree.nodes[idx].graph, tree.nodes[idx].provenance,
                                       tree.nodes[idx].fresh};
        const MultiDigraph& h = parent_ag.graph;

        // Longest in-edge: smallest source, then insertion order.
        std::size_t e_in = h.in_edges(v).front();
        for (std::size_t e : h.in_edges(v))
            if (h.edge(e).first < h.edge(e_in).first) e_in = e;
        // Longest out-edge: largest target, then insertion order.
        std::size_t e_out = h.out_edges(v).front();
        for (std::size_t e : h.out_edges(v))
            if (h.edge(e).second > h.edge(e_out).second) e_out = e;

        const int a = h.edge(e_in).first;
        const int b = h.edge(e_out).second;

        auto make_child = [&](std::size_t dropped) {
            std::vector<std::pair<int, int>> edges;
            std::vector<std::vector<std::size_t>> provenance;
            std::vector<bool> fresh;
            for (std::size_t e = 0; e < h.edge_count(); ++e) {
                if (e == dropped) continue;
                edges.push_back(h.edge(e));
                provenance.push_back(parent_ag.provenance[e]);
                fresh.push_back(parent_ag.fresh[e]);
            }
            edges.emplace_back(a, b);
            provenance.push_back(
                merge_provenance(parent_ag.provenance[e_in], parent_ag.provenance[e_out]));
            fresh.push_back(false);
            return AnnotatedGraph{MultiDigraph(h.n(), std::move(edges)), std::move(provenance),
                                  std::move(fresh)};
        };

        const int depth = tree.nodes[idx].depth + 1;
        const std::size_t first = tree.nodes.size();
        tree.nodes.push_back(make_node(make_child(e_out), g, depth, v,
                                       static_cast<std::ptrdiff_t>(idx)));
        tree.nodes.push_back(make_node(make_child(e_in), g, depth, v,
                                       static_cast<std::ptrdiff_t>(idx)));
        tree.nodes[idx].children = {first, first + 1};
        stack.push_back(first + 1);
        stack.push_back(first);
    }
    return tree;
}

ReductionTree build_ccrt(const MultiDigraph& g, const Netflow& a, std::size_t node_cap) {
    require_outgoing(g);
    check_signature_length(g, a.size());
    ReductionTree tree;
    tree.kind = "ccrt";
    tree.nodes.push_back(make_node(annotate_root(g), g, 0, 0, -1));

    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        const std::size_t idx = stack.back();
        stack.pop_back();

        // Vertices are processed in the order n, n-1, ..., 2; ones without
        // incoming edges need no reduction.
        const int scan_from =
            tree.nodes[idx].reduced_vertex == 0 ? g.n() : tree.nodes[idx].reduced_vertex - 1;
        int v = scan_from;
        while (v >= 2 && tree.nodes[idx].graph.indeg(v) == 0) --v;
        if (v < 2) {
            classify_leaf(tree.nodes[idx]);
            continue;
        }

        const bool positive = a[static_cast<std::size_t>(v - 1)] > 0;
        const long long l = tree.nodes[idx].graph.indeg(v) + (positive ? 1 : 0);
        const long long r = tree.nodes[idx].graph.outdeg(v);
        const auto trees_at_v = noncrossing_trees(l, r);
        if (tree.nodes.size() + trees_at_v.size() > node_cap) {
            tree.truncated = true;
            continue;
        }

        const int depth = tree.nodes[idx].depth + 1;
        // Copy before push_back below invalidates references into tree.nodes.
        const AnnotatedGraph parent_ag{tree.nodes[idx].graph, tree.nodes[idx].provenance,
                                       tree.nodes[idx].fresh};
        std::vector<std::size_t> children;
        for (const auto& t : trees_at_v) {
            children.push_back(tree.nodes.size());
            tree.nodes.push_back(make_node(compounded_reduction_impl(parent_ag, v, positive, t),
                                           g, depth, v, static_cast<std::ptrdiff_t>(idx)));
        }
        tree.nodes[idx].children = children;
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
    }
    return tree;
}

std::vector<std::vector<long long>> tree_leaf_signatures(const ReductionTree& tree) {
    std::vector<std::vector<long long>> signatures;
    for (const auto& node : tree.nodes) {
        if (!node.leaf) continue;
        std::vector<long long> m;
        for (int v = 1; v <= node.graph.n(); ++v) m.push_back(node.graph.outdeg(v));
        signatures.push_back(std::move(m));
    }
    return signatures;
}

std::vector<BrtLeaf> brt_leaves(const MultiDigraph& g, const Netflow& a, ContributionMode mode,
                                std::size_t node_cap) {
    check_signature_length(g, a.size());
    const ReductionTree tree = build_brt(g, node_cap);
    if (tree.truncated)
        fail(ErrorKind::EnumerationCapExceeded, "reduction tree exceeds the node cap");
    const DegreeProfile deg = degree_profile(g);

    std::vector<BrtLeaf> leaves;
    for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
        const ReductionNode& node = tree.nodes[idx];
        if (!node.leaf) continue;
        BrtLeaf leaf;
        leaf.node = idx;
        leaf.full_dimensional = node.full_dimensional;
        leaf.violated_vertex = node.violated_vertex;
        for (int v = 1; v <= g.n(); ++v) leaf.m.push_back(node.graph.outdeg(v));
        leaf.contribution = 1;
        for (std::size_t i = 0; i < leaf.m.size(); ++i) {
            // A vertex with no remaining out-edges has m_i = 0, so either
            // factor vanishes at k = -1 and the leaf contributes 0.
            leaf.contribution *=
                mode == ContributionMode::Out
                    ? binomial(Int(a[i] + deg.outdeg[i] - 1), leaf.m[i] - 1)
                    : multiset_number(Int(a[i] - deg.indeg[i] + 1), leaf.m[i] - 1);
        }
        leaves.push_back(std::move(leaf));
    }
    return leaves;
}

namespace {

std::string edges_label(const MultiDigraph& g) {
    std::ostringstream os;
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
        if (idx > 0) os << ",";
        os << g.edge(idx).first << "-" << g.edge(idx).second;
    }
    return os.str();
}

std::string leaf_label(const ReductionNode& node) {
    if (!node.leaf) return "";
    if (!node.full_dimensional) {
        std::ostringstream os;
        os << "lower-dimensional (violated at " << node.violated_vertex << ")";
        return os.str();
    }
    std::ostringstream os;
    os << "G(";
    for (int v = 1; v <= node.graph.n(); ++v) {
        if (v > 1) os << ",";
        os << node.graph.outdeg(v);
    }
    os << ")";
    return os.str();
}

}  // namespace

std::string tree_to_json(const ReductionTree& tree) {
    nlohmann::json doc;
    doc["schema"] = "flowvol/1";
    doc["kind"] = tree.kind;
    doc["truncated"] = tree.truncated;
    doc["node_count"] = tree.nodes.size();
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
        const ReductionNode& node = tree.nodes[idx];
        nlohmann::json item;
        item["id"] = idx;
        item["parent"] = node.parent;
        item["depth"] = node.depth;
        item["reduced_vertex"] = node.reduced_vertex;
        std::vector<std::string> edges;
        for (const auto& [u, w] : node.graph.edges())
            edges.push_back(std::to_string(u) + "-" + std::to_string(w));
        item["edges"] = edges;
        item["provenance"] = node.provenance;
        item["fresh"] = node.fresh;
        item["monomial_out"] = node.monomial_out;
        item["monomial_in"] = node.monomial_in;
        item["children"] = node.children;
        item["leaf"] = node.leaf;
        if (node.leaf) {
            item["full_dimensional"] = node.full_dimensional;
            item["violated_vertex"] = node.violated_vertex;
            item["label"] = leaf_label(node);
        }
        nodes.push_back(std::move(item));
    }
    doc["nodes"] = std::move(nodes);
    return doc.dump(2);
}

std::string tree_to_dot(const ReductionTree& tree) {
    std::ostringstream os;
    os << "digraph reduction_tree {\n";
    if (tree.truncated) os << "  // truncated at node cap\n";
    for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx) {
        const ReductionNode& node = tree.nodes[idx];
        os << "  n" << idx << " [label=\"";
        if (node.leaf && node.full_dimensional)
            os << leaf_label(node);
        else
            os << edges_label(node.graph);
        os << "\"";
        if (node.leaf) {
            os << ", shape=box";
            if (!node.full_dimensional) os << ", style=dashed";
        }
        os << "];\n";
    }
    for (std::size_t idx = 0; idx < tree.nodes.size(); ++idx)
        for (std::size_t child : tree.nodes[idx].children)
            os << "  n" << idx << " -> n" << child << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace flowvol
