#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace flowvol {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(long long n);

// Generalized binomial coefficient binom(x, k) = x(x-1)...(x-k+1)/k! for any
// integer x; zero when k < 0.
Int binomial(const Int& x, long long k);

// Number of k-element multisets from x types, binom(x+k-1, k). Follows the
// generalized binomial for negative or small x, so multiset(0, 0) = 1 and
// multiset(0, k) = 0 for k > 0.
Int multiset_number(const Int& x, long long k);

// multinomial(total; parts), requires sum(parts) == total and parts >= 0.
Int multinomial(long long total, const std::vector<long long>& parts);

// base^exp with the 0^0 = 1 convention.
Int int_pow(const Int& base, long long exp);

// Determinant over exact integers via fraction-free Bareiss elimination.
// The empty matrix has determinant 1.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

}  // namespace flowvol
