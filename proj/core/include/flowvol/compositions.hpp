#pragma once

#include <vector>

namespace flowvol {

// True when prefix sums of x weakly dominate those of y for the first
// n-1 positions (both length n; the formulas use equal totals).
bool dominates(const std::vector<long long>& x, const std::vector<long long>& y);

// All weak compositions j of `total` into bound.size() nonnegative parts
// with j >= bound in dominance order (prefix sums of j >= prefix sums of
// bound for positions 1..n-1), in ascending lexicographic order.
std::vector<std::vector<long long>> dominance_compositions(const std::vector<long long>& bound,
                                                           long long total);

// Same but j <= bound in dominance order, ascending lexicographic order.
std::vector<std::vector<long long>> dominance_compositions_below(
    const std::vector<long long>& bound, long long total);

}  // namespace flowvol
