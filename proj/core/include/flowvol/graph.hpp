#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace flowvol {

// Loopless multidigraph on vertices 1..n+1 where every edge (i, j) has i < j.
// Vertices 1..n may carry netflow; vertex n+1 is the sink. Edge multisets
// keep insertion order and edges are addressed by index into edges().
class MultiDigraph {
  public:
    MultiDigraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int vertex_count() const { return n_ + 1; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(std::size_t idx) const { return edges_[idx]; }

    // Edge indices incident to vertex v (1-based), in insertion order.
    const std::vector<std::size_t>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<std::size_t>& in_edges(int v) const { return in_[static_cast<std::size_t>(v)]; }
    long long outdeg(int v) const { return static_cast<long long>(out_edges(v).size()); }
    long long indeg(int v) const { return static_cast<long long>(in_edges(v).size()); }

    // True when every vertex 1..n has at least one outgoing edge.
    bool has_outgoing_all() const;
    // True when every vertex 2..n+1 has at least one incoming edge.
    bool has_incoming_all() const;

    bool operator==(const MultiDigraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    std::string to_string() const;  // e.g. "n=3; 1-2,1-3,1-4,2-3,2-4,3-4"

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::size_t>> out_, in_;
};

MultiDigraph make_graph(int n, std::vector<std::pair<int, int>> edges);

// In- and out-degree sequences together with their shifted variants
// out_i = outd_i - 1 and in_i = ind_i - 1. Vectors are 0-based: entry k
// describes vertex k+1 and has length n+1.
struct DegreeProfile {
    std::vector<long long> outdeg, indeg;
    std::vector<long long> out, in;

    long long outd(int v) const { return outdeg[static_cast<std::size_t>(v - 1)]; }
    long long ind(int v) const { return indeg[static_cast<std::size_t>(v - 1)]; }
};

DegreeProfile degree_profile(const MultiDigraph& g);

// Netflow values for vertices 1..n; the sink entry is always -sum.
class Netflow {
  public:
    explicit Netflow(std::vector<long long> entries);

    std::size_t size() const { return entries_.size(); }
    long long operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<long long>& entries() const { return entries_; }
    std::vector<long long> full() const;  // size n+1, last entry -sum
    long long sum() const { return sum_; }
    bool nonnegative() const { return nonnegative_; }

  private:
    std::vector<long long> entries_;
    long long sum_;
    bool nonnegative_;
};

// Graph with every edge reversed and vertices relabeled v -> n+2-v, so edges
// keep the i < j orientation: E(G^r) = {(i,j) | (n+2-j, n+2-i) in E(G)}.
MultiDigraph reverse(const MultiDigraph& g);

// G with a new source joined to vertices 1..n (star) or 1..n+1 (circ),
// relabeled so the new source becomes vertex 1.
MultiDigraph star_graph(const MultiDigraph& g);
MultiDigraph circ_graph(const MultiDigraph& g);

// Sink form G(m): m_i parallel edges (i, n+1) for i = 1..n; all parts >= 1.
MultiDigraph leaf_graph(const std::vector<long long>& m);

// Complete graph on vertex_count >= 2 vertices.
MultiDigraph complete_graph(int vertex_count);
// Pitman-Stanley graph Pi_n: path 1-2-...-(n+1) plus edges (i, n+1).
MultiDigraph pitman_stanley_graph(int n);
// Generalized Pi_n(c): path 1-2-...-(n+1) plus c_i extra copies of (i, n+1).
MultiDigraph pi_c_graph(const std::vector<long long>& c);

// Named family dispatcher: complete(k), pitman_stanley(n), pi_c(c...).
MultiDigraph family_graph(const std::string& name, const std::vector<long long>& params);

// All source-to-sink routes as edge-index sequences, in DFS order following
// edge insertion order. Parallel edges yield distinct routes.
std::vector<std::vector<std::size_t>> source_sink_paths(const MultiDigraph& g);

}  // namespace flowvol
