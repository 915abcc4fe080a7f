#include "flowvol/lidskii.hpp"

#include "flowvol/error.hpp"
#include "flowvol/kostant.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace flowvol {

namespace {

void require_outgoing(const MultiDigraph& g) {
    if (!g.has_outgoing_all())
        fail(ErrorKind::MissingOutgoingEdge, "every vertex 1..n needs an outgoing edge");
}

void require_incoming(const MultiDigraph& g) {
    if (!g.has_incoming_all())
        fail(ErrorKind::MissingIncomingEdge, "every vertex 2..n+1 needs an incoming edge");
}

void check_netflow_length(const MultiDigraph& g, std::size_t len) {
    if (len != static_cast<std::size_t>(g.n()))
        fail(ErrorKind::BadParams, "netflow must have one entry per non-sink vertex");
}

std::vector<std::string> volume_vars(int n) {
    std::vector<std::string> vars;
    vars.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) vars.push_back("a" + std::to_string(i));
    return vars;
}

}  // namespace

LidskiiTermTable lidskii_terms(const MultiDigraph& g) {
    require_outgoing(g);
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);

    LidskiiTermTable table;
    table.total = static_cast<long long>(g.edge_count()) - n;
    table.out.assign(deg.out.begin(), deg.out.begin() + n);
    table.in.assign(deg.in.begin(), deg.in.begin() + n);

    for (auto& j : dominance_compositions(table.out, table.total)) {
        LidskiiTerm term;
        term.multinomial_factor = multinomial(table.total, j);
        std::vector<long long> netflow(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i)
            netflow[static_cast<std::size_t>(i)] = j[static_cast<std::size_t>(i)] -
                                                   table.out[static_cast<std::size_t>(i)];
        term.kpf_factor = kpf(g, netflow);
        term.j = std::move(j);
        table.terms.push_back(std::move(term));
    }
    return table;
}

std::vector<Int> lidskii_volume_terms(const LidskiiTermTable& table, const Netflow& a) {
    if (a.size() != table.out.size())
        fail(ErrorKind::BadParams, "netflow length does not match the term table");
    std::vector<Int> values;
    values.reserve(table.terms.size());
    for (const auto& term : table.terms) {
        Int v = term.multinomial_factor * term.kpf_factor;
        for (std::size_t i = 0; i < term.j.size(); ++i) v *= int_pow(Int(a[i]), term.j[i]);
        values.push_back(std::move(v));
    }
    return values;
}

std::vector<Int> lidskii_points_binomial_terms(const LidskiiTermTable& table, const Netflow& a) {
    if (a.size() != table.out.size())
        fail(ErrorKind::BadParams, "netflow length does not match the term table");
    std::vector<Int> values;
    values.reserve(table.terms.size());
    for (const auto& term : table.terms) {
        Int v = term.kpf_factor;
        for (std::size_t i = 0; i < term.j.size(); ++i)
            v *= binomial(Int(a[i] + table.out[i]), term.j[i]);
        values.push_back(std::move(v));
    }
    return values;
}

std::vector<Int> lidskii_points_multiset_terms(const LidskiiTermTable& table, const Netflow& a) {
    if (a.size() != table.out.size())
        fail(ErrorKind::BadParams, "netflow length does not match the term table");
    std::vector<Int> values;
    values.reserve(table.terms.size());
    for (const auto& term : table.terms) {
        Int v = term.kpf_factor;
        for (std::size_t i = 0; i < term.j.size(); ++i)
            v *= multiset_number(Int(a[i] - table.in[i]), term.j[i]);
        values.push_back(std::move(v));
    }
    return values;
}

namespace {

// Evaluates the Lidskii sum without touching the Kostant factor of terms
// whose netflow-dependent weight is 0, so sparse netflows stay cheap.
template <typename Weight>
Int lazy_lidskii_sum(const MultiDigraph& g, std::size_t a_size, Weight weight) {
    require_outgoing(g);
    check_netflow_length(g, a_size);
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);
    const long long total = static_cast<long long>(g.edge_count()) - n;
    const std::vector<long long> out(deg.out.begin(), deg.out.begin() + n);

    Int result = 0;
    for (const auto& j : dominance_compositions(out, total)) {
        const Int w = weight(j, deg, total);
        if (w == 0) continue;
        std::vector<long long> netflow(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) netflow[static_cast<std::size_t>(i)] =
            j[static_cast<std::size_t>(i)] - out[static_cast<std::size_t>(i)];
        result += w * kpf(g, netflow);
    }
    return result;
}

}  // namespace

Int lidskii_volume(const MultiDigraph& g, const Netflow& a) {
    return lazy_lidskii_sum(
        g, a.size(), [&](const std::vector<long long>& j, const DegreeProfile&, long long total) {
            Int w = multinomial(total, j);
            for (std::size_t i = 0; i < j.size(); ++i) w *= int_pow(Int(a[i]), j[i]);
            return w;
        });
}

ExactPoly lidskii_volume_poly(const MultiDigraph& g) {
    const LidskiiTermTable table = lidskii_terms(g);
    const auto vars = volume_vars(g.n());
    ExactPoly poly(vars);
    for (const auto& term : table.terms)
        poly += ExactPoly::monomial(vars, term.j, Rational(term.multinomial_factor * term.kpf_factor));
    return poly;
}

Int lidskii_points_binomial(const MultiDigraph& g, const Netflow& a) {
    return lazy_lidskii_sum(
        g, a.size(),
        [&](const std::vector<long long>& j, const DegreeProfile& deg, long long) {
            Int w = 1;
            for (std::size_t i = 0; i < j.size(); ++i)
                w *= binomial(Int(a[i] + deg.out[i]), j[i]);
            return w;
        });
}

Int lidskii_points_multiset(const MultiDigraph& g, const Netflow& a) {
    return lazy_lidskii_sum(
        g, a.size(),
        [&](const std::vector<long long>& j, const DegreeProfile& deg, long long) {
            Int w = 1;
            for (std::size_t i = 0; i < j.size(); ++i)
                w *= multiset_number(Int(a[i] - deg.in[i]), j[i]);
            return w;
        });
}

Int volume_indegree(const MultiDigraph& g, const std::vector<long long>& b) {
    check_netflow_length(g, b.size());
    require_incoming(g);
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);
    const long long total = static_cast<long long>(g.edge_count()) - n;

    // Shifted indegrees of vertices 2..n+1.
    std::vector<long long> in_tail(deg.in.begin() + 1, deg.in.end());

    Int result = 0;
    for (const auto& j : dominance_compositions_below(in_tail, total)) {
        Int term = multinomial(total, j);
        for (std::size_t i = 0; i < j.size(); ++i) term *= int_pow(Int(b[i]), j[i]);
        if (term == 0) continue;
        std::vector<long long> netflow(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t k = 0; k < j.size(); ++k) netflow[k + 1] = in_tail[k] - j[k];
        result += term * kpf(g, netflow);
    }
    return result;
}

Int points_indegree(const MultiDigraph& g, const std::vector<long long>& b) {
    check_netflow_length(g, b.size());
    require_incoming(g);
    std::vector<long long> reversed(b.rbegin(), b.rend());
    return lidskii_points_binomial(reverse(g), Netflow(std::move(reversed)));
}

UnitVolumeIdentities unit_volume_identities(const MultiDigraph& g) {
    require_outgoing(g);
    const int n = g.n();
    const DegreeProfile deg = degree_profile(g);
    const long long total = static_cast<long long>(g.edge_count()) - n;

    std::vector<long long> unit(static_cast<std::size_t>(n), 0);
    unit[0] = 1;

    std::vector<long long> rhs_out(static_cast<std::size_t>(n) + 1, 0);
    rhs_out[0] = total - deg.out[0];
    for (int i = 1; i < n; ++i) rhs_out[static_cast<std::size_t>(i)] = -deg.out[static_cast<std::size_t>(i)];

    std::vector<long long> rhs_in(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i < n; ++i) rhs_in[static_cast<std::size_t>(i)] = deg.in[static_cast<std::size_t>(i)];
    rhs_in[static_cast<std::size_t>(n)] = -total + deg.in[static_cast<std::size_t>(n)];

    return {lidskii_volume(g, Netflow(unit)), kpf(g, rhs_out), kpf(g, rhs_in)};
}

}  // namespace flowvol
