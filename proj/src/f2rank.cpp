#include "interlace/f2rank.hpp"

#include <bit>

namespace interlace {

F2Matrix::F2Matrix(int dim) : dim_(dim) {
    if (dim < 0 || dim > 64) throw SizeCapError("F2Matrix dimension must be in [0,64]");
    rows_.assign(static_cast<std::size_t>(dim), 0);
}

F2Matrix F2Matrix::adjacency(const Graph& g) {
    F2Matrix m(g.vertex_count());
    m.rows_ = g.adjacency_rows();
    m.dim_ = g.vertex_count();
    return m;
}

bool F2Matrix::get(int i, int j) const {
    return (rows_[i] >> j) & 1;
}

void F2Matrix::set_sym(int i, int j, bool bit) {
    std::uint64_t bi = std::uint64_t{1} << j, bj = std::uint64_t{1} << i;
    if (bit) {
        rows_[i] |= bi;
        rows_[j] |= bj;
    } else {
        rows_[i] &= ~bi;
        rows_[j] &= ~bj;
    }
}

int f2_rank_rows(std::vector<std::uint64_t> rows) {
    // Insert each row into a basis of leading-bit-distinct pivots.
    std::uint64_t pivots[64] = {0};
    int rank = 0;
    for (std::uint64_t v : rows) {
        while (v) {
            int b = 63 - std::countl_zero(v);
            if (pivots[b]) {
                v ^= pivots[b];
            } else {
                pivots[b] = v;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

int f2_rank(const F2Matrix& m) {
    return f2_rank_rows(m.rows());
}

SubsetRanker::SubsetRanker(const Graph& g) : adj_(g.adjacency_rows()) {}

int SubsetRanker::rank(std::uint64_t subset_mask) const {
    // Rows restricted to the subset keep their original column positions;
    // zeroed columns do not affect the rank.
    std::uint64_t pivots[64] = {0};
    int rank = 0;
    std::uint64_t rest = subset_mask;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t v = adj_[i] & subset_mask;
        while (v) {
            int b = 63 - std::countl_zero(v);
            if (pivots[b]) {
                v ^= pivots[b];
            } else {
                pivots[b] = v;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

} // namespace interlace
