#pragma once

#include <functional>
#include <string>
#include <utility>

#include "interlace/graph.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

enum class TransformKind { clone, comb, cycle };

// A point-to-point reduction: evaluating the transformed graph at `source`
// equals scale^n times evaluating the original at `target` (scale^1 per
// transformed vertex; cloning has scale 1).
struct PointMap {
    std::pair<QSqrt2, QSqrt2> source;
    std::pair<QSqrt2, QSqrt2> target;
    QSqrt2 scale;
    TransformKind kind;
    int k;
};

// P(G_k;u,xi) = p(k,u,xi)^n P(G;u, xi/p); requires p(k,u,xi) != 0.
PointMap comb_point_map(int k, const QSqrt2& u, const QSqrt2& xi);

// P(G_k;u,xi) = p_k(u,xi)^n P(G;u, q_k/p_k); k in {3,4}, p_k(u,xi) != 0.
PointMap cycle_point_map(int k, const QSqrt2& u, const QSqrt2& xi);

// q(G_k;xi,upsilon) = q(G;(xi-1)(upsilon^k-1)/(upsilon-1)+1, upsilon^k);
// at upsilon = 1 the limit form k(xi-1)+1 applies. Scale is always 1.
PointMap clone_point_map_q(int k, const QSqrt2& xi, const QSqrt2& upsilon);

// Oracle evaluating P(.;u,xi) at a fixed point.
using PPointOracle = std::function<QSqrt2(const Graph&)>;

// Recovers the one-variable polynomial P(G;u,x) from an oracle for a single
// point (u,xi): clone towers G_1..G_{n+1} move the evaluation to the nodes
// (1+xi)^i - 1, which are pairwise distinct whenever xi avoids {0,-1,-2};
// Lagrange interpolation then yields the coefficients.
UniPoly recover_P_by_cloning(const Graph& g, const QSqrt2& u, const QSqrt2& xi,
                             const PPointOracle& oracle);

// Oracle evaluating q(.;x,1) at a given x.
using QLineOracle = std::function<QSqrt2(const Graph&, const QSqrt2&)>;

// Recovers q(G;x,1) from an oracle for q(.;xi,1), xi != 1, via the clone
// identity q(G_k;xi,1) = q(G;k(xi-1)+1,1) for k = 1..n+1.
UniPoly recover_q_on_y1_line(const Graph& g, const QLineOracle& oracle, const QSqrt2& xi);

// ----------------------------------------------------------- classification

enum class Status { PolyTime, SharpPHard, Open };

// Tags name the statement line a verdict came from; a closed enumeration.
enum class Reason {
    q_line_x_eq_y,    // polynomial time on the diagonal
    q_y1_line,        // y=1: interpolation-equivalent to the whole line q(x,1)
    q_line_2_minus_x, // y = -(x-1)+1
    q_line_sqrt2_pos, // y = sqrt2 (x-1)+1
    q_line_sqrt2_neg, // y = -sqrt2 (x-1)+1
    q_hard_region,
    p_line_u_eq_1,
    p_line_x_eq_0,
    p_open_u_minus_1,
    p_open_u_minus_beta,
    p_open_u_beta,
    p_hard_region,
};

struct Classification {
    Status status;
    Reason reason;
};

Classification classify_q_point(const QSqrt2& xi, const QSqrt2& upsilon);
Classification classify_P_point(const QSqrt2& u, const QSqrt2& xi);

std::string status_str(Status s);         // POLY | SHARP_P_HARD | OPEN
std::string reason_str(Reason r);         // e.g. q_summary.line_x_eq_y
std::string classification_line(const Classification& c);

} // namespace interlace
