#include "interlace/tutte.hpp"

#include <bit>
#include <numeric>

namespace interlace {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Returns true when the edge merged two components.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

int cycle_matroid_rank(const Graph& g, const std::vector<std::pair<int, int>>& subset) {
    UnionFind uf(g.vertex_count());
    int merged = 0;
    for (auto [u, v] : subset)
        if (u != v && uf.unite(u, v)) ++merged;
    // |V| - #components = number of merging edges in any spanning forest.
    return merged;
}

BiPoly tutte_poly(const Graph& g, int max_edges) {
    if (!g.loopless()) throw DomainError("tutte_poly requires a loopless graph");
    int m = g.edge_count();
    if (m > max_edges || m > 63)
        throw SizeCapError("tutte_poly: " + std::to_string(m) + " edges exceeds the cap of " +
                           std::to_string(std::min(max_edges, 63)));
    const auto& edges = g.edges();

    int rank_full = cycle_matroid_rank(g, edges);

    // count[r(E)-r(B)][|B|-r(B)]
    std::vector<std::vector<std::uint64_t>> count(
        static_cast<std::size_t>(rank_full) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));
    std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        UnionFind uf(g.vertex_count());
        int rb = 0, size = 0;
        std::uint64_t rest = mask;
        while (rest) {
            int e = std::countr_zero(rest);
            rest &= rest - 1;
            ++size;
            if (uf.unite(edges[e].first, edges[e].second)) ++rb;
        }
        ++count[rank_full - rb][size - rb];
    }

    BiPoly xm1("x", "y"), ym1("x", "y");
    xm1.add_term(1, 0, QSqrt2(1));
    xm1.add_term(0, 0, QSqrt2(-1));
    ym1.add_term(0, 1, QSqrt2(1));
    ym1.add_term(0, 0, QSqrt2(-1));
    std::vector<BiPoly> xp{BiPoly::constant(QSqrt2(1), "x", "y")};
    for (int i = 1; i <= rank_full; ++i) xp.push_back(xp.back() * xm1);
    std::vector<BiPoly> yp{BiPoly::constant(QSqrt2(1), "x", "y")};
    for (int j = 1; j <= m; ++j) yp.push_back(yp.back() * ym1);

    BiPoly t("x", "y");
    for (int a = 0; a <= rank_full; ++a)
        for (int b = 0; b <= m; ++b)
            if (count[a][b]) t += (xp[a] * yp[b]).scaled(QSqrt2(BigRational(count[a][b])));
    return t;
}

} // namespace interlace
