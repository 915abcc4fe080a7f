#pragma once

#include "flowvol/graph.hpp"
#include "flowvol/numbers.hpp"
#include "flowvol/poly.hpp"

#include <optional>
#include <vector>

namespace flowvol {

// Flow values per edge, aligned with MultiDigraph::edges() order.
using FlowAssignment = std::vector<long long>;

// Netflow vector realized by a flow: entry v-1 is outflow minus inflow at v.
std::vector<long long> netflow_of(const MultiDigraph& g, const FlowAssignment& flow);

// Kostant partition function: the number of nonnegative integer flows on g
// with the given netflow (full vector of length n+1 summing to zero).
Int kpf(const MultiDigraph& g, const std::vector<long long>& netflow_full);

struct FlowEnumeration {
    Int count;
    std::optional<std::vector<FlowAssignment>> flows;  // present only when listed
};

// Counts flows and optionally lists them (deterministic order). Listing more
// than `cap` flows raises EnumerationCapExceeded.
FlowEnumeration kpf_count_via_flows(const MultiDigraph& g,
                                    const std::vector<long long>& netflow_full,
                                    bool want_list = true, std::size_t cap = 1000000);

// Lattice points of the t-th dilate, kpf(g, t * a). Requires a >= 0, t >= 0.
Int ehrhart_value(const MultiDigraph& g, const Netflow& a, long long t);

struct EhrhartPolynomial {
    ExactPoly poly;   // variable "t"
    bool degenerate;  // dim F_G(a) < m-n, including the empty polytope
};

// Exact interpolation of kpf(g, t*a) through t = 0..m-n. Degeneracy is
// flagged, not fatal; the empty polytope yields the zero polynomial.
EhrhartPolynomial ehrhart_poly(const MultiDigraph& g, const Netflow& a);

// Normalized volume (m-n)! * leading Ehrhart coefficient; the 0-dimensional
// polytope (m = n) has volume 1 and lower-dimensional or empty polytopes have
// volume 0. Raises DegenerateDimension only when m < n.
Int volume_oracle(const MultiDigraph& g, const Netflow& a);

}  // namespace flowvol
