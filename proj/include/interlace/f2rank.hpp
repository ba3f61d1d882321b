#pragma once

#include <cstdint>
#include <vector>

#include "interlace/graph.hpp"

namespace interlace {

// Symmetric 0/1 matrix over F2 with bit-vector rows; dimension <= 64.
// m[i][i] = 1 encodes a self-loop of the inducing vertex.
class F2Matrix {
public:
    F2Matrix() = default;
    explicit F2Matrix(int dim);

    static F2Matrix adjacency(const Graph& g);

    int dim() const { return dim_; }
    bool get(int i, int j) const;
    void set_sym(int i, int j, bool bit); // keeps the matrix symmetric
    const std::vector<std::uint64_t>& rows() const { return rows_; }

private:
    int dim_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Rank over F2 by word-level Gaussian elimination.
int f2_rank(const F2Matrix& m);

// Rank of an arbitrary list of bit-vector rows (each a subset of 64 columns).
int f2_rank_rows(std::vector<std::uint64_t> rows);

// Rank oracle for induced subgraphs: builds the compressed submatrix of the
// adjacency rows for a vertex subset given as a bitmask. This is the inner
// loop of every subset-expansion evaluator.
class SubsetRanker {
public:
    explicit SubsetRanker(const Graph& g);
    int rank(std::uint64_t subset_mask) const;

private:
    std::vector<std::uint64_t> adj_;
};

} // namespace interlace
