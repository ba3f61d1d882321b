#pragma once

#include "interlace/graph.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

// Tutte polynomial by edge-subset state expansion,
//   t(G;x,y) = sum over B of (x-1)^(r(E)-r(B)) (y-1)^(|B|-r(B)),
// with the cycle-matroid rank r(B) = |V| - #components(V,B) computed by
// union-find. Requires a loopless graph (parallel edges cannot occur in
// Graph) and at most max_edges edges.
BiPoly tutte_poly(const Graph& g, int max_edges = 20);

// r(B) for an explicit edge subset, exposed for cross-checks.
int cycle_matroid_rank(const Graph& g, const std::vector<std::pair<int, int>>& subset);

} // namespace interlace
