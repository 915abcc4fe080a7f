#include "flowvol/graph.hpp"

#include "flowvol/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flowvol {

MultiDigraph::MultiDigraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) fail(ErrorKind::VertexRange, "need at least one netflow vertex (n >= 1)");
    if (edges_.empty()) fail(ErrorKind::EmptyGraph, "graph has no edges");
    out_.assign(static_cast<std::size_t>(n_) + 2, {});
    in_.assign(static_cast<std::size_t>(n_) + 2, {});
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        auto [a, b] = edges_[idx];
        if (a < 1 || b < 1 || a > n_ + 1 || b > n_ + 1) {
            std::ostringstream os;
            os << "edge (" << a << "," << b << ") leaves vertex range 1.." << n_ + 1;
            fail(ErrorKind::VertexRange, os.str());
        }
        if (a >= b) {
            std::ostringstream os;
            os << "edge (" << a << "," << b << ") must satisfy i < j";
            fail(ErrorKind::EdgeOrientation, os.str());
        }
        out_[static_cast<std::size_t>(a)].push_back(idx);
        in_[static_cast<std::size_t>(b)].push_back(idx);
    }
}

bool MultiDigraph::has_outgoing_all() const {
    for (int v = 1; v <= n_; ++v)
        if (out_edges(v).empty()) return false;
    return true;
}

bool MultiDigraph::has_incoming_all() const {
    for (int v = 2; v <= n_ + 1; ++v)
        if (in_edges(v).empty()) return false;
    return true;
}

std::string MultiDigraph::to_string() const {
    std::ostringstream os;
    os << "n=" << n_ << "; ";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) os << ",";
        os << edges_[i].first << "-" << edges_[i].second;
    }
    return os.str();
}

MultiDigraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    return MultiDigraph(n, std::move(edges));
}

DegreeProfile degree_profile(const MultiDigraph& g) {
    DegreeProfile p;
    const std::size_t count = static_cast<std::size_t>(g.vertex_count());
    p.outdeg.resize(count);
    p.indeg.resize(count);
    p.out.resize(count);
    p.in.resize(count);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        p.outdeg[static_cast<std::size_t>(v - 1)] = g.outdeg(v);
        p.indeg[static_cast<std::size_t>(v - 1)] = g.indeg(v);
        p.out[static_cast<std::size_t>(v - 1)] = g.outdeg(v) - 1;
        p.in[static_cast<std::size_t>(v - 1)] = g.indeg(v) - 1;
    }
    return p;
}

Netflow::Netflow(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) fail(ErrorKind::VertexRange, "netflow needs at least one entry");
    sum_ = std::accumulate(entries_.begin(), entries_.end(), 0LL);
    nonnegative_ = std::all_of(entries_.begin(), entries_.end(), [](long long a) { return a >= 0; });
}

std::vector<long long> Netflow::full() const {
    std::vector<long long> v = entries_;
    v.push_back(-sum_);
    return v;
}

MultiDigraph reverse(const MultiDigraph& g) {
    const int relabel = g.vertex_count() + 1;  // v -> n+2-v
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (const auto& [a, b] : g.edges()) edges.emplace_back(relabel - b, relabel - a);
    return MultiDigraph(g.n(), std::move(edges));
}

namespace {

MultiDigraph with_new_source(const MultiDigraph& g, int joined_up_to) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() + static_cast<std::size_t>(joined_up_to));
    for (int v = 1; v <= joined_up_to; ++v) edges.emplace_back(1, v + 1);
    for (const auto& [a, b] : g.edges()) edges.emplace_back(a + 1, b + 1);
    return MultiDigraph(g.n() + 1, std::move(edges));
}

}  // namespace

MultiDigraph star_graph(const MultiDigraph& g) { return with_new_source(g, g.n()); }

MultiDigraph circ_graph(const MultiDigraph& g) { return with_new_source(g, g.n() + 1); }

MultiDigraph leaf_graph(const std::vector<long long>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        const long long mi = m[static_cast<std::size_t>(i - 1)];
        if (mi < 1) fail(ErrorKind::ZeroPart, "sink form G(m) needs every m_i >= 1");
        for (long long k = 0; k < mi; ++k) edges.emplace_back(i, n + 1);
    }
    return MultiDigraph(n, std::move(edges));
}

MultiDigraph complete_graph(int vertex_count) {
    if (vertex_count < 2) fail(ErrorKind::BadParams, "complete graph needs at least 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= vertex_count; ++a)
        for (int b = a + 1; b <= vertex_count; ++b) edges.emplace_back(a, b);
    return MultiDigraph(vertex_count - 1, std::move(edges));
}

MultiDigraph pitman_stanley_graph(int n) {
    if (n < 1) fail(ErrorKind::BadParams, "pitman_stanley needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + 1);
    return MultiDigraph(n, std::move(edges));
}

MultiDigraph pi_c_graph(const std::vector<long long>& c) {
    const int n = static_cast<int>(c.size());
    if (n < 1) fail(ErrorKind::BadParams, "pi_c needs at least one part");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 1; i <= n; ++i) {
        const long long ci = c[static_cast<std::size_t>(i - 1)];
        if (ci < 0) fail(ErrorKind::BadParams, "pi_c parts must be nonnegative");
        for (long long k = 0; k < ci; ++k) edges.emplace_back(i, n + 1);
    }
    return MultiDigraph(n, std::move(edges));
}

MultiDigraph family_graph(const std::string& name, const std::vector<long long>& params) {
    if (name == "complete") {
        if (params.size() != 1) fail(ErrorKind::BadParams, "complete takes one parameter");
        return complete_graph(static_cast<int>(params[0]));
    }
    if (name == "pitman_stanley") {
        if (params.size() != 1) fail(ErrorKind::BadParams, "pitman_stanley takes one parameter");
        return pitman_stanley_graph(static_cast<int>(params[0]));
    }
    if (name == "pi_c") return pi_c_graph(params);
    fail(ErrorKind::BadParams, "unknown family '" + name + "'");
}

namespace {

void paths_dfs(const MultiDigraph& g, int v, std::vector<std::size_t>& route,
               std::vector<std::vector<std::size_t>>& out) {
    if (v == g.vertex_count()) {
        out.push_back(route);
        return;
    }
    for (std::size_t idx : g.out_edges(v)) {
        route.push_back(idx);
        paths_dfs(g, g.edge(idx).second, route, out);
        route.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> source_sink_paths(const MultiDigraph& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> route;
    paths_dfs(g, 1, route, out);
    return out;
}

}  // namespace flowvol
