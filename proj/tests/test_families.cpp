#include "flowvol/error.hpp"
#include "flowvol/families.hpp"
#include "flowvol/graph.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"

#include "doctest.h"

#include <algorithm>
#include <vector>

using namespace flowvol;

TEST_CASE("catalan numbers") {
    const std::vector<long long> expected{1, 1, 2, 5, 14, 42, 132, 429};
    for (std::size_t k = 0; k < expected.size(); ++k)
        CHECK(catalan(static_cast<long long>(k)) == expected[k]);
}

TEST_CASE("staircase tableau counts") {
    CHECK(hook_staircase(1) == 1);
    CHECK(hook_staircase(2) == 1);
    CHECK(hook_staircase(3) == 2);
    CHECK(hook_staircase(4) == 16);
    CHECK(hook_staircase(5) == 768);
    for (long long n = 1; n <= 5; ++n) CHECK(staircase_syt_count(n) == hook_staircase(n));
}

TEST_CASE("complete graph volume formulas") {
    const std::vector<long long> cry_expected{1, 2, 10, 140, 5880};
    for (long long n = 3; n <= 7; ++n)
        CHECK(cry_volume(n) == cry_expected[static_cast<std::size_t>(n - 3)]);

    CHECK(tesler_volume(3) == 4);
    CHECK(tesler_volume(4) == 160);
    CHECK(tesler_volume(5) == 107520);
    CHECK(ckm_volume(3) == 4);
    CHECK(ckm_volume(4) == 64);

    // Each closed form evaluates the Lidskii volume at its defining netflow.
    CHECK(lidskii_volume(complete_graph(4), Netflow({1, 0, 0})) == cry_volume(3));
    CHECK(lidskii_volume(complete_graph(5), Netflow({1, 0, 0, 0})) == cry_volume(4));
    CHECK(lidskii_volume(complete_graph(4), Netflow({1, 1, 1})) == tesler_volume(3));
    CHECK(lidskii_volume(complete_graph(5), Netflow({1, 1, 1, 1})) == tesler_volume(4));
    CHECK(lidskii_volume(complete_graph(4), Netflow({1, 1, 0})) == ckm_volume(3));
    CHECK(lidskii_volume(complete_graph(5), Netflow({1, 1, 0, 0})) == ckm_volume(4));
}

TEST_CASE("pitman-stanley closed forms") {
    CHECK(ps_volume({1, 1, 1}) == 16);
    CHECK(ps_volume({1, 1}) == 3);
    CHECK(ps_volume({2, 3}) == 16);  // 2*2*3 + 2^2
    CHECK(ps_lattice_count({1, 1, 1}) == 14);
    CHECK(ps_lattice_count({1, 1}) == 5);
    CHECK(ps_lattice_count({}) == 1);
    CHECK(ps_lattice_count({0, 1}) == 2);
    CHECK(ps_lattice_count({0, 1, 2}) == 7);
    CHECK_THROWS_AS(ps_lattice_count({1, -1}), Error);

    for (int n = 1; n <= 4; ++n) {
        const MultiDigraph g = pitman_stanley_graph(n);
        const std::vector<long long> a{2, 1, 0, 3};
        const std::vector<long long> head(a.begin(), a.begin() + n);
        CHECK(ps_volume(head) == lidskii_volume(g, Netflow(head)));
        CHECK(ps_word_volume(head) == ps_volume(head));
        CHECK(ps_lattice_count(head) == kpf(g, Netflow(head).full()));
    }
}

TEST_CASE("parking functions") {
    CHECK(parking_functions(1).size() == 1);
    CHECK(parking_functions(2).size() == 3);
    CHECK(parking_functions(3).size() == 16);
    CHECK(parking_functions(4).size() == 125);

    const auto pf3 = parking_functions(3);
    CHECK(pf3.front() == std::vector<int>{1, 1, 1});
    CHECK(pf3.back() == std::vector<int>{3, 2, 1});
    for (const auto& word : pf3) {
        std::vector<int> sorted = word;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            CHECK(sorted[i] <= static_cast<int>(i) + 1);
    }
}

TEST_CASE("word expansion of the volume") {
    const WordExpansion expansion = words_expansion(complete_graph(4));
    CHECK(expansion.entries.size() == 4);
    Int total = 0;
    for (const auto& [word, mult] : expansion.entries) {
        CHECK(word.size() == 3);
        CHECK(mult == 1);
        total += mult;
    }
    CHECK(expansion.entries.count({1, 1, 1}) == 1);
    CHECK(expansion.entries.count({1, 1, 2}) == 1);
    CHECK(expansion.entries.count({1, 2, 1}) == 1);
    CHECK(expansion.entries.count({2, 1, 1}) == 1);
    CHECK(words_total(complete_graph(4)) == 4);
    CHECK(words_total(pitman_stanley_graph(3)) == 16);
}

TEST_CASE("generalized pitman-stanley closed forms") {
    CHECK(pic_volume({2, 1}, {1, 1}) == 4);
    CHECK(pic_points_binomial({2, 1}, {1, 1}) == 7);
    CHECK(pic_points_multiset({2, 1}, {1, 1}) == 7);
    CHECK(kpf(pi_c_graph({2, 1}), {1, 1, -2}) == 7);
    CHECK(pic_volume({1, 1, 1}, {1, 1, 1}) == 16);
    CHECK(pic_points_binomial({1, 1, 1}, {1, 1, 1}) == 14);

    for (const std::vector<long long>& c : {std::vector<long long>{2, 1},
                                            std::vector<long long>{1, 0, 2},
                                            std::vector<long long>{0, 2, 1}}) {
        const MultiDigraph g = pi_c_graph(c);
        const std::vector<long long> a{1, 2, 1};
        const std::vector<long long> head(a.begin(), a.begin() + static_cast<long long>(c.size()));
        const Netflow netflow(head);
        CAPTURE(g.to_string());
        CHECK(pic_volume(c, head) == lidskii_volume(g, netflow));
        CHECK(pic_points_binomial(c, head) == kpf(g, netflow.full()));
        CHECK(pic_points_multiset(c, head) == kpf(g, netflow.full()));
    }

    CHECK_THROWS_AS(pic_volume({1, 1}, {1}), Error);  // mismatched lengths
}

TEST_CASE("star volume of the generalized pitman-stanley graph") {
    CHECK(pic_star_volume({1, 1, 1}) == 5);
    CHECK(pic_star_volume({7}) == 1);  // independent of c_1
    for (const std::vector<long long>& c :
         {std::vector<long long>{1, 1, 1}, std::vector<long long>{2, 0, 1},
          std::vector<long long>{1, 2}}) {
        const MultiDigraph star = star_graph(pi_c_graph(c));
        std::vector<long long> unit(static_cast<std::size_t>(star.n()), 0);
        unit[0] = 1;
        CHECK(pic_star_volume(c) == lidskii_volume(star, Netflow(unit)));
    }
}

TEST_CASE("block product evaluation") {
    CHECK(ps_block_product(0, 1, 2) == 2);
    CHECK(ps_block_product(1, 1, 3) == 14);
    for (long long c = 0; c <= 3; ++c)
        for (long long d = 0; d <= 3; ++d)
            for (long long n = 1; n <= 4; ++n) {
                std::vector<long long> profile{c};
                profile.insert(profile.end(), static_cast<std::size_t>(n - 1), d);
                CHECK(ps_block_product(c, d, n) == ps_lattice_count(profile));
            }
}

TEST_CASE("ehrhart positivity for the generalized pitman-stanley family") {
    CHECK(ehrhart_positivity_check({1, 1, 1}, {1, 1, 1}, 3));
    CHECK(ehrhart_positivity_check({2, 1}, {1, 2}, 2));
    CHECK(ehrhart_positivity_check({1}, {2}, 4));
}
