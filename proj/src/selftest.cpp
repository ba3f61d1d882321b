#include "interlace/selftest.hpp"

#include <functional>
#include <random>

#include "interlace/corpus.hpp"
#include "interlace/independence.hpp"
#include "interlace/interlace_eval.hpp"
#include "interlace/interpolation.hpp"
#include "interlace/medial.hpp"
#include "interlace/reductions.hpp"
#include "interlace/transforms.hpp"
#include "interlace/tutte.hpp"

namespace interlace {

namespace {

struct Check {
    std::mt19937_64 rng;

    explicit Check(std::uint64_t seed) : rng(seed) {}

    BigRational small_rational() {
        long n = static_cast<long>(rng() % 19) - 9;
        long d = static_cast<long>(rng() % 4) + 1;
        return BigRational(n, d);
    }

    QSqrt2 random_value() { return QSqrt2(small_rational(), small_rational()); }

    QSqrt2 random_rational_value() { return QSqrt2(small_rational()); }

    void require(bool ok, const std::string& what) {
        if (!ok) throw Error(what);
    }
};

void field_axioms(Check& c) {
    for (int i = 0; i < 200; ++i) {
        QSqrt2 a = c.random_value(), b = c.random_value(), d = c.random_value();
        c.require((a * b) * d == a * (b * d), "multiplication not associative");
        c.require(a * (b + d) == a * b + a * d, "multiplication not distributive");
        if (!a.is_zero()) c.require(a * a.inverse() == QSqrt2(1), "inverse failed");
    }
}

void interpolation_roundtrip(Check& c) {
    for (int trial = 0; trial < 20; ++trial) {
        unsigned deg = static_cast<unsigned>(c.rng() % 17);
        UniPoly p("x");
        for (unsigned e = 0; e <= deg; ++e) p.add_term(e, c.random_value());
        std::vector<std::pair<QSqrt2, QSqrt2>> points;
        // nodes 0,1,2,... are pairwise distinct
        for (unsigned i = 0; i <= deg + 1; ++i) {
            QSqrt2 node(static_cast<int>(i));
            points.emplace_back(node, p.eval(node));
        }
        c.require(lagrange_interpolate(points, "x") == p, "interpolation round trip failed");
    }
}

int naive_f2_rank(const F2Matrix& m) {
    int dim = m.dim();
    std::vector<std::vector<int>> a(static_cast<std::size_t>(dim), std::vector<int>(dim, 0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a[i][j] = m.get(i, j) ? 1 : 0;
    int rank = 0;
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int row = rank; row < dim; ++row)
            if (a[row][col]) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int row = 0; row < dim; ++row)
            if (row != rank && a[row][col])
                for (int j = 0; j < dim; ++j) a[row][j] ^= a[rank][j];
        ++rank;
    }
    return rank;
}

void rank_kernel(Check& c) {
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(c.rng() % 10);
        Graph g = random_graph(n, BigRational(1, 2), BigRational(1, 4), c.rng());
        F2Matrix m = F2Matrix::adjacency(g);
        c.require(f2_rank(m) == naive_f2_rank(m), "bitset rank disagrees with naive oracle");
        SubsetRanker ranker(g);
        std::uint64_t mask = c.rng() & ((std::uint64_t{1} << n) - 1);
        Graph sub = induced_subgraph_mask(g, mask);
        c.require(ranker.rank(mask) == f2_rank(F2Matrix::adjacency(sub)),
                  "subset rank disagrees with induced-subgraph rank");
        c.require(ranker.rank(mask) <= std::popcount(mask), "rank exceeds subset size");
        Graph loopless = random_graph(n, BigRational(1, 2), BigRational(0), c.rng());
        c.require(f2_rank(F2Matrix::adjacency(loopless)) % 2 == 0,
                  "loopless adjacency rank must be even");
    }
}

void interlace_consistency(Check& c) {
    auto graphs = corpus_graphs(6, false);
    for (const auto& entry : graphs) {
        const Graph& g = entry.graph;
        BiPoly p = interlace_P_poly(g);
        BiPoly q = interlace_q_poly(g);
        c.require(q_from_P(p) == q, "q_from_P mismatch on " + entry.name);
        c.require(P_from_q(q) == p, "P_from_q mismatch on " + entry.name);
        QSqrt2 u = c.random_rational_value(), xi = c.random_value();
        c.require(eval_P(g, u, xi) == p.eval(u, xi), "eval_P disagrees with polynomial");
        // value-level link between q and P away from upsilon = 1
        QSqrt2 upsilon = c.random_value();
        if (upsilon != QSqrt2(1)) {
            QSqrt2 lhs = eval_q(g, xi, upsilon);
            QSqrt2 rhs = eval_P(g, (xi - QSqrt2(1)) * (upsilon - QSqrt2(1)).inverse(),
                                upsilon - QSqrt2(1));
            c.require(lhs == rhs, "q/P point identity failed on " + entry.name);
        }
    }
    // disjoint-union multiplicativity
    for (int trial = 0; trial < 10; ++trial) {
        Graph a = random_graph(1 + static_cast<int>(c.rng() % 5), BigRational(1, 2), BigRational(1, 5), c.rng());
        Graph b = random_graph(1 + static_cast<int>(c.rng() % 5), BigRational(1, 2), BigRational(1, 5), c.rng());
        c.require(interlace_q_poly(disjoint_union(a, b)) == interlace_q_poly(a) * interlace_q_poly(b),
                  "q is not multiplicative over disjoint union");
    }
}

void transform_identities(Check& c) {
    auto graphs = corpus_graphs(4, false);
    for (const auto& entry : graphs) {
        const Graph& g = entry.graph;
        int n = g.vertex_count();
        for (int k = 2; k <= 3; ++k) {
            BiPoly lhs = interlace_P_poly(clone_all(g, k));
            BiPoly sub("u", "x"); // (1+x)^k - 1
            sub.add_term(0, 0, QSqrt2(-1));
            BiPoly onepx("u", "x");
            onepx.add_term(0, 0, QSqrt2(1));
            onepx.add_term(0, 1, QSqrt2(1));
            sub += onepx.pow(static_cast<unsigned>(k));
            BiPoly u_var = BiPoly::monomial(QSqrt2(1), 1, 0, "u", "x");
            c.require(lhs == interlace_P_poly(g).substitute(u_var, sub),
                      "clone identity failed on " + entry.name);
        }
        for (int k = 1; k <= 2; ++k) {
            BiPoly lhs = interlace_P_poly(comb_all(g, k));
            BiPoly p = comb_poly(k);
            BiPoly rhs("u", "x");
            BiPoly pg = interlace_P_poly(g);
            for (int j = 0; j <= n; ++j) {
                BiPoly cj = pg.coeff_of_second(static_cast<unsigned>(j));
                if (cj.is_zero()) continue;
                BiPoly xj = BiPoly::monomial(QSqrt2(1), 0, static_cast<unsigned>(j), "u", "x");
                rhs += cj * xj * p.pow(static_cast<unsigned>(n - j));
            }
            c.require(lhs == rhs, "comb identity failed on " + entry.name);
        }
        for (int k = 3; k <= 4; ++k) {
            if (n * k > 18) continue;
            BiPoly lhs = interlace_P_poly(cycle_all(g, k));
            BiPoly p = cycle_p_poly(k), q = cycle_q_poly(k);
            BiPoly rhs("u", "x");
            BiPoly pg = interlace_P_poly(g);
            for (int j = 0; j <= n; ++j) {
                BiPoly cj = pg.coeff_of_second(static_cast<unsigned>(j));
                if (cj.is_zero()) continue;
                rhs += cj * q.pow(static_cast<unsigned>(j)) * p.pow(static_cast<unsigned>(n - j));
            }
            c.require(lhs == rhs, "cycle identity failed on " + entry.name);
        }
        // rank lemmas for single clones
        for (int a = 0; a < n; ++a) {
            Graph gaa = clone_vertex(g, a);
            SubsetRanker rg(g), rgaa(gaa);
            std::uint64_t copy_bit = std::uint64_t{1} << n;
            std::uint64_t a_bit = std::uint64_t{1} << a;
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
                if (sub & a_bit) continue;
                c.require(rgaa.rank(sub) == rg.rank(sub), "clone rank lemma (A) failed");
                int with_a = rg.rank(sub | a_bit);
                c.require(rgaa.rank(sub | a_bit) == with_a &&
                              rgaa.rank(sub | copy_bit) == with_a &&
                              rgaa.rank(sub | a_bit | copy_bit) == with_a,
                          "clone rank lemma (B) failed");
            }
        }
    }
}

void reduction_pipelines(Check& c) {
    auto graphs = corpus_graphs(4, false);
    for (const auto& entry : graphs) {
        const Graph& g = entry.graph;
        QSqrt2 u = c.random_rational_value();
        QSqrt2 xi;
        do {
            xi = c.random_rational_value();
        } while (xi == QSqrt2(0) || xi == QSqrt2(-1) || xi == QSqrt2(-2));
        auto oracle = [&](const Graph& h) { return eval_P(h, u, xi, {.max_vertices = 24}); };
        UniPoly rec = recover_P_by_cloning(g, u, xi, oracle);
        c.require(rec == interlace_P_poly(g).eval_first(u), "interpolation reduction failed on " + entry.name);
    }
    // classifier consistency across the q/P coordinate change
    for (int trial = 0; trial < 200; ++trial) {
        QSqrt2 xi = c.random_value(), upsilon = c.random_value();
        if (upsilon == QSqrt2(1)) continue;
        Status sq = classify_q_point(xi, upsilon).status;
        Status sp = classify_P_point((xi - QSqrt2(1)) * (upsilon - QSqrt2(1)).inverse(),
                                     upsilon - QSqrt2(1))
                        .status;
        c.require(sq == sp, "classifiers disagree at a transferable point");
    }
}

void medial_identity(Check&) {
    for (const auto& [name, emb] : corpus_embeddings()) {
        MedialIdentityReport report = medial_identity_check(emb);
        if (!report.equal)
            throw Error("medial identity failed on " + name + ":\n" + report.summary());
    }
}

void independence_recovery(Check& c) {
    auto graphs = corpus_graphs(6, true);
    int done = 0;
    for (const auto& entry : graphs) {
        if (entry.graph.vertex_count() < 1) continue;
        if (++done > 8) break;
        AlphaResult expected = alpha_bruteforce(entry.graph);
        for (const QSqrt2& lambda : {QSqrt2(1), QSqrt2(BigRational(-1, 2))}) {
            NoisyOracleConfig cfg{lambda, BigRational(1, 2), c.rng(), NoiseMode::adversarial_at_bound};
            AlphaCandidate got = recover_alpha(entry.graph, cfg, make_amplified_oracle(cfg));
            c.require(got.c == expected.c, "degree recovery failed on " + entry.name);
        }
    }
}

} // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
    std::vector<std::pair<std::string, std::function<void(Check&)>>> groups = {
        {"algebra.field_axioms", field_axioms},
        {"algebra.interpolation_roundtrip", interpolation_roundtrip},
        {"graph.rank_kernel", rank_kernel},
        {"interlace.consistency", interlace_consistency},
        {"transforms.identities", transform_identities},
        {"reductions.pipelines", reduction_pipelines},
        {"tutte_medial.identity", medial_identity},
        {"independence.recovery", independence_recovery},
    };
    std::vector<SelftestResult> results;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        Check check(seed + i);
        SelftestResult r{groups[i].first, true, ""};
        try {
            groups[i].second(check);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace interlace
