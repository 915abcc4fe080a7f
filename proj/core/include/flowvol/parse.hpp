#pragma once

#include "flowvol/graph.hpp"

#include <string>
#include <vector>

namespace flowvol {

// Graph specification grammar, raising ParseError on malformed input:
//   builtin tokens  k<d> (complete graph on d vertices), ps<d> (Pitman-Stanley
//                   Pi_d), pic:<csv> (generalized Pi_n(c) profile)
//   inline          "n=<int>;edges=(1,2),(2,3)" or "n=<int>;edges=1-2,2-3"
//   @<path>         file holding either a JSON object {"n": int,
//                   "edges": [[u, v], ...]} or an inline specification
MultiDigraph parse_graph(const std::string& spec);

// Comma-separated signed integers, e.g. "1,-1,0".
std::vector<long long> parse_integers(const std::string& text);

// The n free netflow entries for vertices 1..n; the sink entry is derived.
Netflow parse_netflow(const std::string& text, int n);

}  // namespace flowvol
