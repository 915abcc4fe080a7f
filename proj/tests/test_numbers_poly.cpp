#include "flowvol/numbers.hpp"
#include "flowvol/poly.hpp"

#include "doctest.h"

#include <vector>

using namespace flowvol;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(Int(5), 2) == 10);
    CHECK(binomial(Int(5), 0) == 1);
    CHECK(binomial(Int(5), 6) == 0);
    CHECK(binomial(Int(5), -1) == 0);
    CHECK(binomial(Int(-2), 2) == 3);  // (-2)(-3)/2
    CHECK(binomial(Int(0), 0) == 1);
}

TEST_CASE("multiset numbers") {
    CHECK(multiset_number(Int(3), 2) == 6);  // binom(4, 2)
    CHECK(multiset_number(Int(0), 0) == 1);
    CHECK(multiset_number(Int(0), 3) == 0);
    CHECK(multiset_number(Int(2), 3) == 4);   // binom(4, 3)
    CHECK(multiset_number(Int(-1), 1) == -1); // binom(-1, 1)
}

TEST_CASE("multinomial and powers") {
    CHECK(multinomial(3, {2, 1, 0}) == 3);
    CHECK(multinomial(3, {3, 0, 0}) == 1);
    CHECK(multinomial(6, {2, 2, 2}) == 90);
    CHECK(int_pow(Int(0), 0) == 1);
    CHECK(int_pow(Int(0), 3) == 0);
    CHECK(int_pow(Int(-2), 3) == -8);
}

TEST_CASE("bareiss determinant") {
    CHECK(bareiss_determinant({}) == 1);
    CHECK(bareiss_determinant({{Int(7)}}) == 7);
    CHECK(bareiss_determinant({{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
    CHECK(bareiss_determinant({{Int(2), Int(0), Int(1)},
                               {Int(1), Int(1), Int(0)},
                               {Int(0), Int(3), Int(1)}}) == 5);
    // Singular matrix
    CHECK(bareiss_determinant({{Int(1), Int(2)}, {Int(2), Int(4)}}) == 0);
}

TEST_CASE("polynomial arithmetic and rendering") {
    const ExactPoly t = ExactPoly::monomial({"t"}, {1}, 1);
    const ExactPoly p = t * t * Rational(2) + t * Rational(3) + ExactPoly::constant({"t"}, 1);
    CHECK(p.total_degree() == 2);
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.coefficient({2}) == 2);
    CHECK(p.coefficient({1}) == 3);
    CHECK(p.coefficient({0}) == 1);
    CHECK(p.coefficient({5}) == 0);
    CHECK(p.evaluate({Rational(1)}) == 6);
    CHECK(p.evaluate({Rational(2)}) == 15);
    CHECK(p.to_string() == "2t^2+3t+1");
    CHECK((p - p).is_zero());

    const ExactPoly x = ExactPoly::monomial({"x", "y"}, {1, 0}, 1);
    const ExactPoly y = ExactPoly::monomial({"x", "y"}, {0, 1}, 1);
    const ExactPoly q = x * y + y * y;
    CHECK(q.is_homogeneous());
    CHECK(q.evaluate({Rational(2), Rational(3)}) == 15);
}

TEST_CASE("interpolation") {
    // Through t^2 + 1 at t = 0, 1, 2
    const ExactPoly p = interpolate("t", {{0, Int(1)}, {1, Int(2)}, {2, Int(5)}});
    CHECK(p.coefficient({2}) == 1);
    CHECK(p.coefficient({1}) == 0);
    CHECK(p.coefficient({0}) == 1);
    CHECK(p.evaluate({Rational(10)}) == 101);
}
