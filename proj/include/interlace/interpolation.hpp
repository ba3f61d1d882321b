#pragma once

#include <utility>
#include <vector>

#include "interlace/polynomial.hpp"

namespace interlace {

// Exact Lagrange interpolation through the given (node, value) pairs.
// Nodes must be pairwise distinct; the result is the unique polynomial of
// degree < points.size() through all of them.
UniPoly lagrange_interpolate(const std::vector<std::pair<QSqrt2, QSqrt2>>& points,
                             std::string var = "x");

} // namespace interlace
