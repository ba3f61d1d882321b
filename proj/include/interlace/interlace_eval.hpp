#pragma once

#include <vector>

#include "interlace/f2rank.hpp"
#include "interlace/graph.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

// Cap for 2^n subset expansions. Exceeding it raises SizeCapError instead
// of silently truncating.
struct EvalOptions {
    int max_vertices = 20;
};

// Joint distribution of (|A|, rk(G[A])) over all vertex subsets A; the
// common core of every interlace-type evaluator here.
struct RankSizeCounts {
    int n = 0;
    std::vector<std::vector<std::uint64_t>> count; // count[size][rank]
};

RankSizeCounts count_rank_size(const Graph& g, const EvalOptions& opts = {});

// P(G;u,x) = sum over subsets A of x^|A| u^rk(G[A]), as a polynomial in (u,x).
BiPoly interlace_P_poly(const Graph& g, const EvalOptions& opts = {});

// q(G;x,y) = sum over subsets A of (x-1)^rk (y-1)^(|A|-rk), in (x,y).
BiPoly interlace_q_poly(const Graph& g, const EvalOptions& opts = {});

QSqrt2 eval_P(const Graph& g, const QSqrt2& u, const QSqrt2& xi,
              const EvalOptions& opts = {});
QSqrt2 eval_q(const Graph& g, const QSqrt2& xi, const QSqrt2& upsilon,
              const EvalOptions& opts = {});

// Multivariate form: every vertex carries its own value, P = sum over A of
// (prod of the values in A) * u^rk(G[A]). assignment.size() must equal n.
QSqrt2 eval_P_multivariate(const Graph& g, const QSqrt2& u,
                           const std::vector<QSqrt2>& assignment,
                           const EvalOptions& opts = {});

// I(G;x), coefficients count independent sets by cardinality. Requires a
// loopless graph. Computed both as the u=0 specialization of P and by direct
// enumeration; the two routes are cross-checked on every call.
UniPoly independent_set_poly(const Graph& g, const EvalOptions& opts = {});

enum class SpecialPoly { vertex_nullity, vertex_rank };

// vertex_nullity: q(G;2,y) as a polynomial in y.
// vertex_rank:    q(G;x,2) as a polynomial in x.
UniPoly specialize(const Graph& g, SpecialPoly kind, const EvalOptions& opts = {});

// Exact formal conversions between the two bivariate forms:
//   q(G;x,y) = P(G;(x-1)/(y-1), y-1)  and  P(G;u,x) = q(G;ux+1, x+1).
// q_from_P raises DomainError when the substitution would leave the
// polynomial ring, which signals that the input did not come from a graph.
BiPoly q_from_P(const BiPoly& p);
BiPoly P_from_q(const BiPoly& q);

} // namespace interlace
