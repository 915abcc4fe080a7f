#include "flowvol/kostant.hpp"

#include "flowvol/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace flowvol {

namespace {

void check_netflow_shape(const MultiDigraph& g, const std::vector<long long>& netflow_full) {
    if (netflow_full.size() != static_cast<std::size_t>(g.vertex_count()))
        fail(ErrorKind::BadParams, "netflow vector must have one entry per vertex");
    const long long sum = std::accumulate(netflow_full.begin(), netflow_full.end(), 0LL);
    if (sum != 0) {
        std::ostringstream os;
        os << "netflow entries sum to " << sum << ", expected 0";
        fail(ErrorKind::NonzeroSum, os.str());
    }
}

// Outgoing edges of v grouped by target, ascending; (target, multiplicity).
std::vector<std::pair<int, long long>> target_groups(const MultiDigraph& g, int v) {
    std::map<int, long long> counts;
    for (std::size_t idx : g.out_edges(v)) ++counts[g.edge(idx).second];
    return {counts.begin(), counts.end()};
}

}  // namespace

std::vector<long long> netflow_of(const MultiDigraph& g, const FlowAssignment& flow) {
    if (flow.size() != g.edge_count())
        fail(ErrorKind::BadParams, "flow assignment must have one entry per edge");
    std::vector<long long> net(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t idx = 0; idx < flow.size(); ++idx) {
        const auto& [a, b] = g.edge(idx);
        net[static_cast<std::size_t>(a - 1)] += flow[idx];
        net[static_cast<std::size_t>(b - 1)] -= flow[idx];
    }
    return net;
}

Int kpf(const MultiDigraph& g, const std::vector<long long>& netflow_full) {
    check_netflow_shape(g, netflow_full);
    const int n = g.n();

    // Forward DP over vertices 1..n. A state is the inflow accumulated so far
    // for every vertex (entries of processed vertices reset to zero so states
    // merge); the value is the number of partial flows reaching that state.
    std::map<std::vector<long long>, Int> states;
    states.emplace(std::vector<long long>(static_cast<std::size_t>(n) + 1, 0), Int(1));

    for (int v = 1; v <= n; ++v) {
        const auto groups = target_groups(g, v);
        std::map<std::vector<long long>, Int> next;
        for (const auto& [state, ways] : states) {
            const long long supply = state[static_cast<std::size_t>(v - 1)] +
                                     netflow_full[static_cast<std::size_t>(v - 1)];
            if (supply < 0) continue;  // prefix cut: no completion exists
            if (groups.empty()) {
                if (supply != 0) continue;
                std::vector<long long> s = state;
                s[static_cast<std::size_t>(v - 1)] = 0;
                next[std::move(s)] += ways;
                continue;
            }
            // Distribute `supply` over target groups; parallel edges within a
            // group contribute a stars-and-bars factor.
            std::vector<long long> amounts(groups.size(), 0);
            auto rec = [&](auto&& self, std::size_t k, long long remaining, const Int& acc) -> void {
                if (k + 1 == groups.size()) {
                    const Int w = acc * multiset_number(Int(groups[k].second), remaining);
                    if (w == 0) return;
                    std::vector<long long> s = state;
                    s[static_cast<std::size_t>(v - 1)] = 0;
                    for (std::size_t t = 0; t + 1 < groups.size(); ++t)
                        s[static_cast<std::size_t>(groups[t].first - 1)] += amounts[t];
                    s[static_cast<std::size_t>(groups[k].first - 1)] += remaining;
                    next[std::move(s)] += w;
                    return;
                }
                for (long long take = 0; take <= remaining; ++take) {
                    amounts[k] = take;
                    self(self, k + 1, remaining - take,
                         acc * multiset_number(Int(groups[k].second), take));
                }
            };
            rec(rec, 0, supply, ways);
        }
        states = std::move(next);
    }

    Int total = 0;
    for (const auto& [state, ways] : states) total += ways;
    return total;
}

namespace {

void enumerate_rec(const MultiDigraph& g, const std::vector<long long>& netflow_full, int v,
                   std::vector<long long>& inflow, FlowAssignment& flow, std::size_t cap,
                   std::vector<FlowAssignment>& out) {
    const int n = g.n();
    if (v > n) {
        if (out.size() >= cap)
            fail(ErrorKind::EnumerationCapExceeded, "flow listing exceeds the configured cap");
        out.push_back(flow);
        return;
    }
    const long long supply = inflow[static_cast<std::size_t>(v - 1)] +
                             netflow_full[static_cast<std::size_t>(v - 1)];
    if (supply < 0) return;
    const auto& out_idx = g.out_edges(v);
    if (out_idx.empty()) {
        if (supply == 0) enumerate_rec(g, netflow_full, v + 1, inflow, flow, cap, out);
        return;
    }
    auto assign = [&](auto&& self, std::size_t k, long long remaining) -> void {
        if (k + 1 == out_idx.size()) {
            const std::size_t idx = out_idx[k];
            const int target = g.edge(idx).second;
            flow[idx] = remaining;
            inflow[static_cast<std::size_t>(target - 1)] += remaining;
            enumerate_rec(g, netflow_full, v + 1, inflow, flow, cap, out);
            inflow[static_cast<std::size_t>(target - 1)] -= remaining;
            flow[idx] = 0;
            return;
        }
        const std::size_t idx = out_idx[k];
        const int target = g.edge(idx).second;
        for (long long take = 0; take <= remaining; ++take) {
            flow[idx] = take;
            inflow[static_cast<std::size_t>(target - 1)] += take;
            self(self, k + 1, remaining - take);
            inflow[static_cast<std::size_t>(target - 1)] -= take;
        }
        flow[idx] = 0;
    };
    assign(assign, 0, supply);
}

}  // namespace

FlowEnumeration kpf_count_via_flows(const MultiDigraph& g,
                                    const std::vector<long long>& netflow_full, bool want_list,
                                    std::size_t cap) {
    check_netflow_shape(g, netflow_full);
    FlowEnumeration result{kpf(g, netflow_full), std::nullopt};
    if (!want_list) return result;
    if (result.count > Int(cap))
        fail(ErrorKind::EnumerationCapExceeded, "flow listing exceeds the configured cap");
    std::vector<FlowAssignment> flows;
    std::vector<long long> inflow(static_cast<std::size_t>(g.vertex_count()), 0);
    FlowAssignment flow(g.edge_count(), 0);
    enumerate_rec(g, netflow_full, 1, inflow, flow, cap, flows);
    result.flows = std::move(flows);
    return result;
}

namespace {

std::vector<long long> scaled_full(const Netflow& a, long long t) {
    std::vector<long long> v = a.full();
    for (auto& x : v) x *= t;
    return v;
}

}  // namespace

Int ehrhart_value(const MultiDigraph& g, const Netflow& a, long long t) {
    if (a.size() != static_cast<std::size_t>(g.n()))
        fail(ErrorKind::BadParams, "netflow must have one entry per non-sink vertex");
    if (!a.nonnegative())
        fail(ErrorKind::NegativeNetflow, "dilation requires a nonnegative netflow");
    if (t < 0) fail(ErrorKind::BadParams, "dilation parameter must be nonnegative");
    return kpf(g, scaled_full(a, t));
}

EhrhartPolynomial ehrhart_poly(const MultiDigraph& g, const Netflow& a) {
    if (a.size() != static_cast<std::size_t>(g.n()))
        fail(ErrorKind::BadParams, "netflow must have one entry per non-sink vertex");
    if (!a.nonnegative())
        fail(ErrorKind::NegativeNetflow, "Ehrhart interpolation requires a nonnegative netflow");

    const long long dim = static_cast<long long>(g.edge_count()) - g.n();
    if (kpf(g, a.full()) == 0) return {ExactPoly({"t"}), true};
    if (dim <= 0) return {ExactPoly::constant({"t"}, 1), false};

    std::vector<std::pair<long long, Int>> points;
    points.reserve(static_cast<std::size_t>(dim) + 1);
    for (long long t = 0; t <= dim; ++t) points.emplace_back(t, kpf(g, scaled_full(a, t)));
    ExactPoly poly = interpolate("t", points);
    const bool degenerate = poly.coefficient({dim}) == 0;
    return {std::move(poly), degenerate};
}

Int volume_oracle(const MultiDigraph& g, const Netflow& a) {
    const long long dim = static_cast<long long>(g.edge_count()) - g.n();
    if (dim < 0)
        fail(ErrorKind::DegenerateDimension, "graph has fewer edges than netflow vertices");
    // Lower-dimensional (or empty) polytopes have (m-n)-volume exactly 0.
    EhrhartPolynomial e = ehrhart_poly(g, a);
    if (e.degenerate) return 0;
    if (dim == 0) return 1;
    const Rational lead = e.poly.coefficient({dim});
    const Rational vol = lead * Rational(factorial(dim));
    if (denominator(vol) != 1)
        fail(ErrorKind::BadParams, "normalized volume is not an integer");
    return numerator(vol);
}

}  // namespace flowvol
