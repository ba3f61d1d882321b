#pragma once

#include "interlace/graph.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

// Graph transformations driving the point-to-point reductions. All of them
// are pure constructors: new vertices are appended after the existing ids in
// a fixed order (original vertex ascending, then copy index ascending), so
// transformed graphs serialize reproducibly.

// Duplicates vertex a: the copy gets a's neighbors; if a carries a loop, the
// copy is additionally joined to a and gets a loop itself.
Graph clone_vertex(const Graph& g, int a);

// Clones every vertex k-1 times (k >= 1), built directly from the original
// adjacency: two clone classes are fully joined iff the originals were
// adjacent; a looped original yields a looped clique inside its class.
Graph clone_all(const Graph& g, int k, int max_vertices = 64);

// Attaches k pendant leaves (k >= 1).
Graph comb_vertex(const Graph& g, int a, int k, int max_vertices = 64);
Graph comb_all(const Graph& g, int k, int max_vertices = 64);

// Closes a k-cycle (k >= 3) through a vertex via k-1 new path vertices.
Graph cycle_vertex(const Graph& g, int a, int k, int max_vertices = 64);
Graph cycle_all(const Graph& g, int k, int max_vertices = 64);

// The comb reduction's denominator p(k,u,x) = (1+x)^k (x u^2 + 1) - x u^2,
// as a polynomial in (u,x).
BiPoly comb_poly(int k);

// The cycle reduction's polynomial pair (p_k, q_k) for k in {3,4}.
BiPoly cycle_p_poly(int k);
BiPoly cycle_q_poly(int k);

} // namespace interlace
