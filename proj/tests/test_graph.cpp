#include "flowvol/error.hpp"
#include "flowvol/graph.hpp"

#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

using namespace flowvol;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::BadParams;
}

}  // namespace

TEST_CASE("graph construction and validation") {
    const MultiDigraph g = make_graph(2, {{1, 2}, {1, 2}, {2, 3}, {2, 3}});
    CHECK(g.n() == 2);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 4);
    CHECK(g.edge(0) == std::pair<int, int>{1, 2});
    CHECK(g.out_edges(1) == std::vector<std::size_t>{0, 1});
    CHECK(g.in_edges(3) == std::vector<std::size_t>{2, 3});
    CHECK(g.outdeg(2) == 2);
    CHECK(g.indeg(2) == 2);
    CHECK(g.has_outgoing_all());
    CHECK(g.has_incoming_all());
    CHECK(g.to_string() == "n=2; 1-2,1-2,2-3,2-3");

    CHECK(kind_of([] { make_graph(2, {{2, 2}}); }) == ErrorKind::EdgeOrientation);
    CHECK(kind_of([] { make_graph(2, {{3, 1}}); }) == ErrorKind::EdgeOrientation);
    CHECK(kind_of([] { make_graph(2, {{1, 4}}); }) == ErrorKind::VertexRange);
    CHECK(kind_of([] { make_graph(2, {}); }) == ErrorKind::EmptyGraph);
    CHECK(kind_of([] { make_graph(0, {{1, 2}}); }) == ErrorKind::VertexRange);
}

TEST_CASE("degree profile") {
    const DegreeProfile deg = degree_profile(complete_graph(4));
    CHECK(deg.outdeg == std::vector<long long>{3, 2, 1, 0});
    CHECK(deg.indeg == std::vector<long long>{0, 1, 2, 3});
    CHECK(deg.out == std::vector<long long>{2, 1, 0, -1});
    CHECK(deg.in == std::vector<long long>{-1, 0, 1, 2});
    CHECK(deg.outd(1) == 3);
    CHECK(deg.ind(4) == 3);
}

TEST_CASE("netflow") {
    const Netflow a({1, -1, 2});
    CHECK(a.size() == 3);
    CHECK(a[2] == 2);
    CHECK(a.sum() == 2);
    CHECK(a.full() == std::vector<long long>{1, -1, 2, -2});
    CHECK_FALSE(a.nonnegative());
    CHECK(Netflow({0, 0}).nonnegative());
}

TEST_CASE("reverse relabels and flips edges") {
    const MultiDigraph g = make_graph(3, {{1, 2}, {1, 4}, {2, 3}});
    const MultiDigraph r = reverse(g);
    CHECK(r.n() == 3);
    for (const auto& [u, v] : r.edges()) CHECK(u < v);
    // (u, v) -> (5-v, 5-u): (1,2)->(3,4), (1,4)->(1,4), (2,3)->(2,3)
    std::vector<std::pair<int, int>> expected{{3, 4}, {1, 4}, {2, 3}};
    std::sort(expected.begin(), expected.end());
    auto actual = r.edges();
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);
    CHECK(reverse(r) == make_graph(3, {{1, 2}, {1, 4}, {2, 3}}));
}

TEST_CASE("star and circ extensions") {
    const MultiDigraph g = complete_graph(3);  // n = 2
    const MultiDigraph s = star_graph(g);
    CHECK(s.n() == 3);
    CHECK(s.edge_count() == g.edge_count() + 2);  // source to old 1..2
    CHECK(s.outdeg(1) == 2);
    const MultiDigraph c = circ_graph(g);
    CHECK(c.n() == 3);
    CHECK(c.edge_count() == g.edge_count() + 3);  // source to old 1..3
    CHECK(c.outdeg(1) == 3);
}

TEST_CASE("leaf graph") {
    const MultiDigraph g = leaf_graph({3, 2, 1});
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 6);
    CHECK(g.outdeg(1) == 3);
    CHECK(g.outdeg(3) == 1);
    for (const auto& [u, v] : g.edges()) CHECK(v == 4);
    CHECK(kind_of([] { leaf_graph({2, 0}); }) == ErrorKind::ZeroPart);
}

TEST_CASE("families") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(4).n() == 3);
    const MultiDigraph ps3 = pitman_stanley_graph(3);
    CHECK(ps3.n() == 3);
    CHECK(ps3.edge_count() == 6);
    CHECK(ps3.outdeg(1) == 2);
    CHECK(ps3.outdeg(3) == 2);
    const MultiDigraph pic = pi_c_graph({2, 1});
    CHECK(pic.n() == 2);
    CHECK(pic.edge_count() == 5);
    CHECK(pic.outdeg(1) == 3);
    CHECK(pic.outdeg(2) == 2);
    CHECK(family_graph("complete", {4}) == complete_graph(4));
    CHECK(family_graph("pitman_stanley", {3}) == pitman_stanley_graph(3));
    CHECK(family_graph("pi_c", {2, 1}) == pi_c_graph({2, 1}));
    CHECK(kind_of([] { family_graph("nope", {1}); }) == ErrorKind::BadParams);
}

TEST_CASE("source sink paths") {
    const auto paths = source_sink_paths(complete_graph(4));
    CHECK(paths.size() == 4);  // 1-4, 1-2-4, 1-3-4, 1-2-3-4
    const auto doubled = source_sink_paths(make_graph(2, {{1, 2}, {1, 2}, {2, 3}, {2, 3}}));
    CHECK(doubled.size() == 4);  // parallel edges give distinct routes
}
