#include "interlace/interpolation.hpp"

namespace interlace {

UniPoly lagrange_interpolate(const std::vector<std::pair<QSqrt2, QSqrt2>>& points,
                             std::string var) {
    if (points.empty()) throw DomainError("interpolation needs at least one point");
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DomainError("duplicate interpolation node " + qsqrt2_str(points[i].first));

    // master(x) = prod (x - x_j); each basis numerator is master / (x - x_i),
    // recovered by exact synthetic division.
    UniPoly master = UniPoly::constant(QSqrt2(1), var);
    for (const auto& [node, value] : points) {
        UniPoly lin(var);
        lin.add_term(1, QSqrt2(1));
        lin.add_term(0, -node);
        master = master * lin;
    }

    UniPoly result(var);
    for (std::size_t i = 0; i < n; ++i) {
        const QSqrt2& xi = points[i].first;
        // Synthetic division of master by (x - xi); remainder is zero.
        std::vector<QSqrt2> dense(n + 1, QSqrt2(0));
        for (const auto& [e, c] : master.terms()) dense[e] = c;
        std::vector<QSqrt2> quot(n, QSqrt2(0));
        QSqrt2 carry(0);
        for (std::size_t k = n; k-- > 0;) {
            carry = dense[k + 1] + carry * xi;
            quot[k] = carry;
        }
        QSqrt2 denom(1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom *= xi - points[j].first;
        QSqrt2 scale = points[i].second * denom.inverse();
        for (std::size_t k = 0; k < n; ++k) result.add_term(static_cast<unsigned>(k), quot[k] * scale);
    }
    return result;
}

} // namespace interlace
