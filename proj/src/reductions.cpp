#include "interlace/reductions.hpp"

#include "interlace/interpolation.hpp"
#include "interlace/transforms.hpp"

namespace interlace {

PointMap comb_point_map(int k, const QSqrt2& u, const QSqrt2& xi) {
    QSqrt2 p = comb_poly(k).eval(u, xi);
    if (p.is_zero())
        throw DomainError("comb reduction undefined: p(" + std::to_string(k) + ",u,xi) = 0 at u=" +
                          qsqrt2_str(u) + ", xi=" + qsqrt2_str(xi));
    return PointMap{{u, xi}, {u, xi * p.inverse()}, p, TransformKind::comb, k};
}

PointMap cycle_point_map(int k, const QSqrt2& u, const QSqrt2& xi) {
    QSqrt2 p = cycle_p_poly(k).eval(u, xi);
    if (p.is_zero())
        throw DomainError("cycle reduction undefined: p_" + std::to_string(k) + "(u,xi) = 0 at u=" +
                          qsqrt2_str(u) + ", xi=" + qsqrt2_str(xi));
    QSqrt2 q = cycle_q_poly(k).eval(u, xi);
    return PointMap{{u, xi}, {u, q * p.inverse()}, p, TransformKind::cycle, k};
}

PointMap clone_point_map_q(int k, const QSqrt2& xi, const QSqrt2& upsilon) {
    if (k < 1) throw DomainError("clone_point_map_q needs k >= 1");
    QSqrt2 one(1);
    QSqrt2 target_x;
    if (upsilon == one) {
        // limit of (xi-1)(y^k-1)/(y-1)+1 as y -> 1
        target_x = (xi - one) * QSqrt2(k) + one;
    } else {
        QSqrt2 yk = upsilon.pow(k);
        target_x = (xi - one) * (yk - one) * (upsilon - one).inverse() + one;
    }
    return PointMap{{xi, upsilon}, {target_x, upsilon.pow(k)}, QSqrt2(1), TransformKind::clone, k};
}

UniPoly recover_P_by_cloning(const Graph& g, [[maybe_unused]] const QSqrt2& u, const QSqrt2& xi,
                             const PPointOracle& oracle) {
    if (xi == QSqrt2(0) || xi == QSqrt2(-1) || xi == QSqrt2(-2))
        throw DomainError("forbidden xi = " + qsqrt2_str(xi) +
                          ": interpolation nodes (1+xi)^i-1 would collide");
    int n = g.vertex_count();
    std::vector<std::pair<QSqrt2, QSqrt2>> points;
    QSqrt2 one(1);
    QSqrt2 base = one + xi;
    QSqrt2 pw = one;
    for (int i = 1; i <= n + 1; ++i) {
        pw *= base;
        QSqrt2 node = pw - one;
        Graph gi = clone_all(g, i);
        points.emplace_back(node, oracle(gi));
    }
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            if (points[a].first == points[b].first)
                throw Error("internal: interpolation node collision despite xi restriction");
    return lagrange_interpolate(points, "x");
}

UniPoly recover_q_on_y1_line(const Graph& g, const QLineOracle& oracle, const QSqrt2& xi) {
    if (xi == QSqrt2(1))
        throw DomainError("xi = 1 degenerates all interpolation nodes to 1");
    int n = g.vertex_count();
    std::vector<std::pair<QSqrt2, QSqrt2>> points;
    QSqrt2 one(1);
    for (int k = 1; k <= n + 1; ++k) {
        QSqrt2 node = (xi - one) * QSqrt2(k) + one;
        Graph gk = clone_all(g, k);
        points.emplace_back(node, oracle(gk, xi));
    }
    return lagrange_interpolate(points, "x");
}

// ----------------------------------------------------------- classification

Classification classify_q_point(const QSqrt2& xi, const QSqrt2& upsilon) {
    QSqrt2 one(1);
    if (upsilon == xi) return {Status::PolyTime, Reason::q_line_x_eq_y};
    if (upsilon == one) return {Status::Open, Reason::q_y1_line};
    QSqrt2 shifted = xi - one;
    if (upsilon == one - shifted) return {Status::Open, Reason::q_line_2_minus_x};
    if (upsilon == QSqrt2::sqrt2() * shifted + one) return {Status::Open, Reason::q_line_sqrt2_pos};
    if (upsilon == -QSqrt2::sqrt2() * shifted + one) return {Status::Open, Reason::q_line_sqrt2_neg};
    return {Status::SharpPHard, Reason::q_hard_region};
}

Classification classify_P_point(const QSqrt2& u, const QSqrt2& xi) {
    if (u == QSqrt2(1)) return {Status::PolyTime, Reason::p_line_u_eq_1};
    if (xi == QSqrt2(0)) return {Status::PolyTime, Reason::p_line_x_eq_0};
    if (u == QSqrt2(-1)) return {Status::Open, Reason::p_open_u_minus_1};
    if (u == -QSqrt2::beta()) return {Status::Open, Reason::p_open_u_minus_beta};
    if (u == QSqrt2::beta()) return {Status::Open, Reason::p_open_u_beta};
    return {Status::SharpPHard, Reason::p_hard_region};
}

std::string status_str(Status s) {
    switch (s) {
    case Status::PolyTime: return "POLY";
    case Status::SharpPHard: return "SHARP_P_HARD";
    case Status::Open: return "OPEN";
    }
    return "?";
}

std::string reason_str(Reason r) {
    switch (r) {
    case Reason::q_line_x_eq_y: return "q_summary.line_x_eq_y";
    case Reason::q_y1_line: return "q_summary.y1_line_equivalence";
    case Reason::q_line_2_minus_x: return "q_summary.line_y_eq_2_minus_x";
    case Reason::q_line_sqrt2_pos: return "q_summary.line_y_eq_sqrt2_shift_pos";
    case Reason::q_line_sqrt2_neg: return "q_summary.line_y_eq_sqrt2_shift_neg";
    case Reason::q_hard_region: return "q_summary.hard_region";
    case Reason::p_line_u_eq_1: return "p_summary.line_u_eq_1";
    case Reason::p_line_x_eq_0: return "p_summary.line_x_eq_0";
    case Reason::p_open_u_minus_1: return "p_summary.open_u_eq_minus_1";
    case Reason::p_open_u_minus_beta: return "p_summary.open_u_eq_minus_beta";
    case Reason::p_open_u_beta: return "p_summary.open_u_eq_beta";
    case Reason::p_hard_region: return "p_summary.hard_region";
    }
    return "?";
}

std::string classification_line(const Classification& c) {
    return status_str(c.status) + " " + reason_str(c.reason);
}

} // namespace interlace
