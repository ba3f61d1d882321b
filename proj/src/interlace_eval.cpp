#include "interlace/interlace_eval.hpp"

#include <bit>

namespace interlace {

namespace {

void check_cap(const Graph& g, const EvalOptions& opts, const char* what) {
    int n = g.vertex_count();
    if (n > opts.max_vertices || n > 63)
        throw SizeCapError(std::string(what) + ": " + std::to_string(n) +
                           " vertices exceeds the cap of " +
                           std::to_string(std::min(opts.max_vertices, 63)));
}

std::vector<QSqrt2> powers_of(const QSqrt2& v, int up_to) {
    std::vector<QSqrt2> p;
    p.reserve(static_cast<std::size_t>(up_to) + 1);
    p.emplace_back(1);
    for (int i = 1; i <= up_to; ++i) p.push_back(p.back() * v);
    return p;
}

std::vector<BiPoly> bipoly_powers(const BiPoly& v, int up_to) {
    std::vector<BiPoly> p;
    p.push_back(BiPoly::constant(QSqrt2(1), v.var1(), v.var2()));
    for (int i = 1; i <= up_to; ++i) p.push_back(p.back() * v);
    return p;
}

} // namespace

RankSizeCounts count_rank_size(const Graph& g, const EvalOptions& opts) {
    check_cap(g, opts, "rank/size table");
    int n = g.vertex_count();
    RankSizeCounts t;
    t.n = n;
    t.count.assign(static_cast<std::size_t>(n) + 1,
                   std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    SubsetRanker ranker(g);
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int size = std::popcount(mask);
        int rk = ranker.rank(mask);
        ++t.count[size][rk];
    }
    return t;
}

BiPoly interlace_P_poly(const Graph& g, const EvalOptions& opts) {
    RankSizeCounts t = count_rank_size(g, opts);
    BiPoly p("u", "x");
    for (int k = 0; k <= t.n; ++k)
        for (int r = 0; r <= t.n; ++r)
            if (t.count[k][r])
                p.add_term(static_cast<unsigned>(r), static_cast<unsigned>(k),
                           QSqrt2(BigRational(t.count[k][r])));
    return p;
}

BiPoly interlace_q_poly(const Graph& g, const EvalOptions& opts) {
    RankSizeCounts t = count_rank_size(g, opts);
    BiPoly xm1("x", "y"), ym1("x", "y");
    xm1.add_term(1, 0, QSqrt2(1));
    xm1.add_term(0, 0, QSqrt2(-1));
    ym1.add_term(0, 1, QSqrt2(1));
    ym1.add_term(0, 0, QSqrt2(-1));
    auto xp = bipoly_powers(xm1, t.n);
    auto yp = bipoly_powers(ym1, t.n);
    BiPoly q("x", "y");
    for (int k = 0; k <= t.n; ++k)
        for (int r = 0; r <= k; ++r)
            if (t.count[k][r])
                q += (xp[r] * yp[k - r]).scaled(QSqrt2(BigRational(t.count[k][r])));
    return q;
}

QSqrt2 eval_P(const Graph& g, const QSqrt2& u, const QSqrt2& xi, const EvalOptions& opts) {
    RankSizeCounts t = count_rank_size(g, opts);
    auto up = powers_of(u, t.n);
    auto xp = powers_of(xi, t.n);
    QSqrt2 acc(0);
    for (int k = 0; k <= t.n; ++k)
        for (int r = 0; r <= k; ++r)
            if (t.count[k][r]) acc += QSqrt2(BigRational(t.count[k][r])) * up[r] * xp[k];
    return acc;
}

QSqrt2 eval_q(const Graph& g, const QSqrt2& xi, const QSqrt2& upsilon, const EvalOptions& opts) {
    RankSizeCounts t = count_rank_size(g, opts);
    auto xp = powers_of(xi - QSqrt2(1), t.n);
    auto yp = powers_of(upsilon - QSqrt2(1), t.n);
    QSqrt2 acc(0);
    for (int k = 0; k <= t.n; ++k)
        for (int r = 0; r <= k; ++r)
            if (t.count[k][r]) acc += QSqrt2(BigRational(t.count[k][r])) * xp[r] * yp[k - r];
    return acc;
}

QSqrt2 eval_P_multivariate(const Graph& g, const QSqrt2& u,
                           const std::vector<QSqrt2>& assignment,
                           const EvalOptions& opts) {
    check_cap(g, opts, "multivariate evaluation");
    int n = g.vertex_count();
    if (static_cast<int>(assignment.size()) != n)
        throw DomainError("assignment covers " + std::to_string(assignment.size()) +
                          " vertices, graph has " + std::to_string(n));
    SubsetRanker ranker(g);
    auto up = powers_of(u, n);
    QSqrt2 acc(0);
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        QSqrt2 prod(1);
        std::uint64_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            prod *= assignment[v];
        }
        acc += prod * up[ranker.rank(mask)];
    }
    return acc;
}

UniPoly independent_set_poly(const Graph& g, const EvalOptions& opts) {
    if (!g.loopless())
        throw DomainError("independent set polynomial requires a loopless graph");
    check_cap(g, opts, "independent set polynomial");
    int n = g.vertex_count();

    // Route (a): u = 0 in P keeps exactly the rank-0 subsets.
    RankSizeCounts t = count_rank_size(g, opts);
    UniPoly via_rank("x");
    for (int k = 0; k <= n; ++k)
        if (t.count[k][0]) via_rank.add_term(static_cast<unsigned>(k), QSqrt2(BigRational(t.count[k][0])));

    // Route (b): direct enumeration of independent sets.
    auto adj = g.adjacency_rows();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool independent = true;
        std::uint64_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & mask) {
                independent = false;
                break;
            }
        }
        if (independent) ++counts[std::popcount(mask)];
    }
    UniPoly via_enum("x");
    for (int k = 0; k <= n; ++k)
        if (counts[k]) via_enum.add_term(static_cast<unsigned>(k), QSqrt2(BigRational(counts[k])));

    if (via_rank != via_enum)
        throw Error("internal: independent-set routes disagree on " + to_edgelist(g));
    return via_enum;
}

UniPoly specialize(const Graph& g, SpecialPoly kind, const EvalOptions& opts) {
    BiPoly q = interlace_q_poly(g, opts);
    if (kind == SpecialPoly::vertex_nullity) return q.eval_first(QSqrt2(2)); // in y
    return q.eval_second(QSqrt2(2));                                         // in x
}

BiPoly q_from_P(const BiPoly& p) {
    if (p.var1() != "u" || p.var2() != "x")
        throw DomainError("q_from_P expects a polynomial in (u,x)");
    unsigned max1 = p.degree_in_first().value_or(0);
    unsigned max2 = p.degree_in_second().value_or(0);
    BiPoly xm1("x", "y"), ym1("x", "y");
    xm1.add_term(1, 0, QSqrt2(1));
    xm1.add_term(0, 0, QSqrt2(-1));
    ym1.add_term(0, 1, QSqrt2(1));
    ym1.add_term(0, 0, QSqrt2(-1));
    auto xp = bipoly_powers(xm1, static_cast<int>(max1));
    auto yp = bipoly_powers(ym1, static_cast<int>(max2));
    BiPoly q("x", "y");
    for (const auto& [e, c] : p.terms()) {
        auto [i, j] = e;
        if (j < i)
            throw DomainError("substitution produced a non-polynomial: term u^" +
                              std::to_string(i) + "*x^" + std::to_string(j) +
                              " is not a graph-polynomial term");
        q += (xp[i] * yp[j - i]).scaled(c);
    }
    return q;
}

BiPoly P_from_q(const BiPoly& q) {
    if (q.var1() != "x" || q.var2() != "y")
        throw DomainError("P_from_q expects a polynomial in (x,y)");
    unsigned max1 = q.degree_in_first().value_or(0);
    unsigned max2 = q.degree_in_second().value_or(0);
    BiPoly uxp1("u", "x"), xp1("u", "x");
    uxp1.add_term(1, 1, QSqrt2(1));
    uxp1.add_term(0, 0, QSqrt2(1));
    xp1.add_term(0, 1, QSqrt2(1));
    xp1.add_term(0, 0, QSqrt2(1));
    auto ap = bipoly_powers(uxp1, static_cast<int>(max1));
    auto bp = bipoly_powers(xp1, static_cast<int>(max2));
    BiPoly p("u", "x");
    for (const auto& [e, c] : q.terms()) p += (ap[e.first] * bp[e.second]).scaled(c);
    return p;
}

} // namespace interlace
