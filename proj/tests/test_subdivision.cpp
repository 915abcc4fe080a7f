#include "flowvol/error.hpp"
#include "flowvol/families.hpp"
#include "flowvol/graph.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"
#include "flowvol/subdivision.hpp"

#include "doctest.h"

#include <map>
#include <vector>

using namespace flowvol;

namespace {

const MultiDigraph& doubled_path() {
    static const MultiDigraph g = make_graph(2, {{1, 2}, {1, 2}, {2, 3}, {2, 3}});
    return g;
}

std::map<std::vector<long long>, long long> census(const std::vector<std::vector<long long>>& sigs) {
    std::map<std::vector<long long>, long long> counts;
    for (const auto& s : sigs) ++counts[s];
    return counts;
}

}  // namespace

TEST_CASE("noncrossing trees") {
    const auto trees = noncrossing_trees(2, 3);
    REQUIRE(trees.size() == 3);
    CHECK(trees[0].comp == std::vector<long long>{0, 2});
    CHECK(trees[1].comp == std::vector<long long>{1, 1});
    CHECK(trees[2].comp == std::vector<long long>{2, 0});
    CHECK(noncrossing_tree_count(2, 3) == 3);
    CHECK(noncrossing_tree_count(4, 5) == binomial(Int(7), 3));
    CHECK(noncrossing_trees(1, 1).size() == 1);
    CHECK(Int(noncrossing_trees(3, 4).size()) == noncrossing_tree_count(3, 4));
}

TEST_CASE("basic reduction splits the volume") {
    const MultiDigraph& g = doubled_path();
    const auto [g1, g2] = basic_reduction(g, 0, 2);
    CHECK(g1.edge_count() == g.edge_count());
    CHECK(g2.edge_count() == g.edge_count());
    CHECK(g1.edges().back() == std::pair<int, int>{1, 3});
    CHECK(g2.edges().back() == std::pair<int, int>{1, 3});

    const Netflow ones({1, 1});
    CHECK(lidskii_volume(g1, ones) + lidskii_volume(g2, ones) == lidskii_volume(g, ones));

    CHECK_THROWS_AS(basic_reduction(g, 2, 0), Error);  // not composable
    CHECK_THROWS_AS(basic_reduction(g, 0, 1), Error);  // both enter vertex 2
}

TEST_CASE("compounded reduction splits the volume") {
    const MultiDigraph& g = doubled_path();

    SUBCASE("positive netflow at the reduced vertex") {
        const Netflow ones({1, 1});
        Int total = 0;
        for (const auto& t : noncrossing_trees(g.indeg(2) + 1, g.outdeg(2))) {
            const MultiDigraph piece = compounded_reduction(g, 2, true, t);
            CHECK(piece.edge_count() == g.edge_count());
            total += lidskii_volume(piece, ones);
        }
        CHECK(total == lidskii_volume(g, ones));
    }

    SUBCASE("zero netflow at the reduced vertex") {
        const Netflow a({1, 0});
        Int total = 0;
        for (const auto& t : noncrossing_trees(g.indeg(2), g.outdeg(2))) {
            const MultiDigraph piece = compounded_reduction(g, 2, false, t);
            CHECK(piece.edge_count() == g.edge_count());
            CHECK(piece.edges().back() == std::pair<int, int>{2, 3});  // fresh zero-flow edge
            total += lidskii_volume(piece, a);
        }
        CHECK(total == lidskii_volume(g, a));
    }
}

TEST_CASE("cell census for the complete graph") {
    const Netflow ones({1, 1, 1});
    const auto cells = ccrt_cells(complete_graph(4), ones);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].m == std::vector<long long>{3, 2, 1});
    CHECK(cells[0].multiplicity == 1);
    CHECK(cells[0].volume_term == 3);
    CHECK(cells[0].points_term_binomial == 6);
    CHECK(cells[0].points_term_multiset == 3);
    CHECK(cells[1].m == std::vector<long long>{4, 1, 1});
    CHECK(cells[1].multiplicity == 1);
    CHECK(cells[1].volume_term == 1);
    CHECK(cells[1].points_term_binomial == 1);
    CHECK(cells[1].points_term_multiset == 4);

    CHECK(cell_volume({3, 2, 1}, ones) == 3);
    CHECK(cell_volume({4, 1, 1}, ones) == 1);

    // Zero netflow entries prune the census to compatible signatures.
    const auto pruned = ccrt_cells(complete_graph(4), Netflow({1, 0, 0}));
    REQUIRE(pruned.size() == 1);
    CHECK(pruned[0].m == std::vector<long long>{4, 1, 1});
}

TEST_CASE("cell counts and cell types") {
    CHECK(num_cells(complete_graph(4)) == 2);
    CHECK(num_cell_types(complete_graph(4)) == 2);
    CHECK(num_cells(complete_graph(5)) == 10);
    CHECK(num_cell_types(complete_graph(5)) == 7);
    CHECK(num_cell_types_enumerated(complete_graph(5)) == 7);
    for (int n = 2; n <= 6; ++n) {
        const MultiDigraph g = pitman_stanley_graph(n);
        CHECK(num_cells(g) == catalan(n));
        CHECK(num_cell_types(g) == catalan(n));
    }
}

TEST_CASE("cell count crosschecks agree") {
    for (const MultiDigraph& g : {complete_graph(4), complete_graph(5), pitman_stanley_graph(2),
                                  pi_c_graph({2, 1}), doubled_path()}) {
        const CellCountCrosschecks checks = num_cells_crosschecks(g);
        CAPTURE(g.to_string());
        CHECK(checks.all_equal);
        REQUIRE(checks.explicit_count.has_value());
        CHECK(*checks.explicit_count == checks.formula_sum);
    }
    CHECK(num_cells_crosschecks(complete_graph(4)).formula_sum == 2);
}

TEST_CASE("binary reduction tree") {
    const MultiDigraph k4 = complete_graph(4);
    const ReductionTree tree = build_brt(k4);
    CHECK(tree.kind == "brt");
    CHECK_FALSE(tree.truncated);
    CHECK(tree.nodes[0].parent == -1);
    CHECK(tree.nodes[0].depth == 0);

    std::map<std::vector<long long>, long long> full_dim;
    for (const auto& node : tree.nodes) {
        if (!node.leaf) {
            CHECK(node.children.size() == 2);
            continue;
        }
        if (node.full_dimensional) {
            std::vector<long long> m;
            for (int v = 1; v <= k4.n(); ++v) m.push_back(node.graph.outdeg(v));
            ++full_dim[m];
        } else {
            CHECK(node.violated_vertex != 0);
        }
    }
    const std::map<std::vector<long long>, long long> expected{{{3, 2, 1}, 1}, {{4, 1, 1}, 1}};
    CHECK(full_dim == expected);

    CHECK(build_brt(k4, 3).truncated);
}

TEST_CASE("brt leaf contributions sum to the point count") {
    const MultiDigraph k4 = complete_graph(4);
    const Netflow ones({1, 1, 1});
    for (const ContributionMode mode : {ContributionMode::Out, ContributionMode::In}) {
        Int total = 0;
        for (const BrtLeaf& leaf : brt_leaves(k4, ones, mode)) {
            if (!leaf.full_dimensional) CHECK(leaf.contribution == 0);
            total += leaf.contribution;
        }
        CHECK(total == kpf(k4, ones.full()));
    }
}

TEST_CASE("compounded reduction tree") {
    const MultiDigraph k4 = complete_graph(4);
    const ReductionTree tree = build_ccrt(k4, Netflow({1, 1, 1}));
    CHECK(tree.kind == "ccrt");
    CHECK_FALSE(tree.truncated);

    std::vector<std::vector<long long>> leaf_sigs;
    for (const auto& node : tree.nodes)
        if (node.leaf) {
            CHECK(node.full_dimensional);
            std::vector<long long> m;
            for (int v = 1; v <= k4.n(); ++v) m.push_back(node.graph.outdeg(v));
            leaf_sigs.push_back(std::move(m));
        }
    const std::map<std::vector<long long>, long long> expected{{{3, 2, 1}, 1}, {{4, 1, 1}, 1}};
    CHECK(census(leaf_sigs) == expected);
    CHECK(census(tree_leaf_signatures(tree)) == expected);

    // The BRT reaches the same full-dimensional census.
    const ReductionTree brt = build_brt(k4);
    std::vector<std::vector<long long>> brt_sigs;
    for (const auto& node : brt.nodes)
        if (node.leaf && node.full_dimensional) {
            std::vector<long long> m;
            for (int v = 1; v <= k4.n(); ++v) m.push_back(node.graph.outdeg(v));
            brt_sigs.push_back(std::move(m));
        }
    CHECK(census(brt_sigs) == expected);
}

TEST_CASE("flow tree correspondence round trips") {
    const MultiDigraph k4 = complete_graph(4);
    for (const auto& cell : ccrt_cells(k4, Netflow({1, 1, 1}))) {
        std::vector<long long> netflow;
        for (int v = 1; v <= k4.n(); ++v) netflow.push_back(cell.m[static_cast<std::size_t>(v - 1)] - k4.outdeg(v));
        netflow.push_back(0);
        const FlowEnumeration fe = kpf_count_via_flows(k4, netflow);
        REQUIRE(fe.flows.has_value());
        CHECK(Int(fe.flows->size()) == cell.multiplicity);
        for (const FlowAssignment& flow : *fe.flows) {
            const auto trees = phi_bijection(k4, cell.m, flow);
            CHECK(trees.size() == static_cast<std::size_t>(k4.n() - 1));
            CHECK(psi_inverse(k4, trees) == flow);
        }
    }
    CHECK_THROWS_AS(phi_bijection(k4, {3, 2, 1}, FlowAssignment{1, 0, 0, 0, 0, 0}), Error);
}

TEST_CASE("tree exports") {
    const ReductionTree tree = build_ccrt(complete_graph(4), Netflow({1, 1, 1}));
    const std::string json = tree_to_json(tree);
    CHECK(json.find("\"flowvol/1\"") != std::string::npos);
    CHECK(json.find("\"ccrt\"") != std::string::npos);
    CHECK(json.find("\"nodes\"") != std::string::npos);
    CHECK(json == tree_to_json(tree));  // deterministic

    const std::string dot = tree_to_dot(tree);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
