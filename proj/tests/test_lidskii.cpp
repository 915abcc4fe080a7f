#include "flowvol/error.hpp"
#include "flowvol/graph.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"

#include "doctest.h"

#include <vector>

using namespace flowvol;

namespace {

const MultiDigraph& doubled_path() {
    static const MultiDigraph g = make_graph(2, {{1, 2}, {1, 2}, {2, 3}, {2, 3}});
    return g;
}

std::vector<std::vector<long long>> term_js(const LidskiiTermTable& table) {
    std::vector<std::vector<long long>> js;
    for (const auto& term : table.terms) js.push_back(term.j);
    return js;
}

}  // namespace

TEST_CASE("term table for the complete graph") {
    const LidskiiTermTable table = lidskii_terms(complete_graph(4));
    CHECK(table.total == 3);
    CHECK(table.out == std::vector<long long>{2, 1, 0});
    CHECK(table.in == std::vector<long long>{-1, 0, 1});
    CHECK(term_js(table) == std::vector<std::vector<long long>>{{2, 1, 0}, {3, 0, 0}});
    CHECK(table.terms[0].multinomial_factor == 3);
    CHECK(table.terms[1].multinomial_factor == 1);
    CHECK(table.terms[0].kpf_factor == 1);
    CHECK(table.terms[1].kpf_factor == 1);

    const Netflow ones({1, 1, 1});
    CHECK(lidskii_volume_terms(table, ones) == std::vector<Int>{3, 1});
    CHECK(lidskii_points_binomial_terms(table, ones) == std::vector<Int>{6, 1});
    CHECK(lidskii_points_multiset_terms(table, ones) == std::vector<Int>{3, 4});
}

TEST_CASE("term table for the doubled path") {
    const LidskiiTermTable table = lidskii_terms(doubled_path());
    CHECK(table.total == 2);
    CHECK(term_js(table) == std::vector<std::vector<long long>>{{1, 1}, {2, 0}});
    CHECK(table.terms[0].kpf_factor == 1);
    CHECK(table.terms[1].kpf_factor == 2);

    const Netflow ones({1, 1});
    CHECK(lidskii_volume_terms(table, ones) == std::vector<Int>{2, 2});
    CHECK(lidskii_points_binomial_terms(table, ones) == std::vector<Int>{4, 2});
    CHECK(lidskii_points_multiset_terms(table, ones) == std::vector<Int>{0, 6});
}

TEST_CASE("term table for the Pitman-Stanley graph") {
    const LidskiiTermTable table = lidskii_terms(pitman_stanley_graph(3));
    CHECK(term_js(table) == std::vector<std::vector<long long>>{
                                {1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {3, 0, 0}});
    for (const auto& term : table.terms) CHECK(term.kpf_factor == 1);

    const Netflow ones({1, 1, 1});
    CHECK(lidskii_points_binomial_terms(table, ones) == std::vector<Int>{8, 2, 2, 2, 0});
    CHECK(lidskii_points_multiset_terms(table, ones) == std::vector<Int>{2, 2, 3, 3, 4});
}

TEST_CASE("volume and point sums match the oracles") {
    const Netflow ones3({1, 1, 1});
    CHECK(lidskii_volume(complete_graph(4), ones3) == 4);
    CHECK(lidskii_volume(pitman_stanley_graph(3), ones3) == 16);
    CHECK(lidskii_volume(doubled_path(), Netflow({1, 1})) == 4);

    CHECK(lidskii_points_binomial(complete_graph(4), ones3) == 7);
    CHECK(lidskii_points_multiset(complete_graph(4), ones3) == 7);
    CHECK(lidskii_points_binomial(pitman_stanley_graph(3), ones3) == 14);
    CHECK(lidskii_points_multiset(pitman_stanley_graph(3), ones3) == 14);
    CHECK(lidskii_points_binomial(doubled_path(), Netflow({1, 1})) == 6);
    CHECK(lidskii_points_multiset(doubled_path(), Netflow({1, 1})) == 6);

    // Point formulas evaluate Kostant values at arbitrary nonnegative netflows.
    const Netflow a({2, 0, 3});
    const Int direct = kpf(pitman_stanley_graph(3), a.full());
    CHECK(lidskii_points_binomial(pitman_stanley_graph(3), a) == direct);
    CHECK(lidskii_points_multiset(pitman_stanley_graph(3), a) == direct);
}

TEST_CASE("volume polynomial") {
    const ExactPoly poly = lidskii_volume_poly(complete_graph(4));
    CHECK(poly.is_homogeneous());
    CHECK(poly.total_degree() == 3);
    CHECK(poly.evaluate({Rational(1), Rational(1), Rational(1)}) == 4);
    CHECK(poly.evaluate({Rational(1), Rational(0), Rational(0)}) == 1);
    CHECK(poly.coefficient({2, 1, 0}) == 3);
}

TEST_CASE("indegree routes") {
    const MultiDigraph k4 = complete_graph(4);
    // vol F_{k4}(b1+b2+b3, -b1, -b2, -b3) through the indegree formula.
    const std::vector<long long> b{1, 1, 1};
    CHECK(volume_indegree(k4, b) == lidskii_volume(reverse(k4), Netflow({1, 1, 1})));
    CHECK(points_indegree(k4, b) == kpf(k4, {3, -1, -1, -1}));
    CHECK(points_indegree(k4, {2, 0, 1}) == kpf(k4, {3, -2, 0, -1}));

    // The reversal carries F_{k4}(1,1,1,-3) over to an indegree evaluation.
    const std::vector<long long> reversed_entries{1, 1, 1};
    CHECK(volume_indegree(reverse(k4), reversed_entries) == 4);
}

TEST_CASE("unit netflow identities") {
    for (int v = 4; v <= 6; ++v) {
        const UnitVolumeIdentities ids = unit_volume_identities(complete_graph(v));
        CHECK(ids.volume == ids.rhs_out);
        CHECK(ids.volume == ids.rhs_in);
    }
    CHECK(unit_volume_identities(complete_graph(4)).volume == 1);
    CHECK(unit_volume_identities(pitman_stanley_graph(3)).volume == 1);
}

TEST_CASE("missing outgoing edges are rejected") {
    const MultiDigraph g = make_graph(2, {{1, 2}, {1, 3}});
    CHECK_THROWS_AS(lidskii_terms(g), Error);
    CHECK_THROWS_AS(lidskii_volume(g, Netflow({1, 0})), Error);
    // The indegree route needs incoming edges everywhere instead.
    CHECK_THROWS_AS(volume_indegree(make_graph(2, {{1, 3}, {1, 3}}),
                                    std::vector<long long>{1, 0}),
                    Error);
}
