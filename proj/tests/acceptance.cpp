// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <unordered_map>

#include "interlace/corpus.hpp"
#include "interlace/independence.hpp"
#include "interlace/interlace_eval.hpp"
#include "interlace/medial.hpp"
#include "interlace/reductions.hpp"
#include "interlace/transforms.hpp"
#include "interlace/tutte.hpp"

using namespace interlace;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::mt19937_64 rng(0xacce97);

BigRational small_rational() {
    long n = static_cast<long>(rng() % 19) - 9;
    long d = static_cast<long>(rng() % 4) + 1;
    return BigRational(n, d);
}

QSqrt2 random_value() { return QSqrt2(small_rational(), small_rational()); }

// ---------------------------------------------------------------------------
// 1. Definition consistency: the two bivariate forms convert into each other
//    by exact formal substitution on 200 seeded random graphs, n <= 10.
void criterion_definition_consistency() {
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, BigRational(1, 2), BigRational(1, 4), 0xc1 * 1000 + i);
        BiPoly p = interlace_P_poly(g);
        BiPoly q = interlace_q_poly(g);
        require(q_from_P(p) == q, "q_from_P(P(G)) != q(G) on " + to_edgelist(g));
        require(P_from_q(q) == p, "P_from_q(q(G)) != P(G) on " + to_edgelist(g));
    }
}

// ---------------------------------------------------------------------------
// 2. Cloning identity: P(G_k;u,x) = P(G;u,(1+x)^k - 1) exactly, n <= 6,
//    k in {2,3}.
void criterion_clone_identity() {
    BiPoly u_var = BiPoly::monomial(QSqrt2(1), 1, 0, "u", "x");
    for (const auto& entry : corpus_graphs(6, false)) {
        BiPoly pg = interlace_P_poly(entry.graph);
        for (int k = 2; k <= 3; ++k) {
            BiPoly onepx("u", "x");
            onepx.add_term(0, 0, QSqrt2(1));
            onepx.add_term(0, 1, QSqrt2(1));
            BiPoly sub = onepx.pow(static_cast<unsigned>(k));
            sub.add_term(0, 0, QSqrt2(-1));
            require(interlace_P_poly(clone_all(entry.graph, k)) == pg.substitute(u_var, sub),
                    "clone identity failed on " + entry.name + " k=" + std::to_string(k));
        }
    }
}

// ---------------------------------------------------------------------------
// 3. Comb and cycle identities with the published coefficient lists, cleared
//    of denominators, n <= 5; comb k in {1,2,3}, cycle k in {3,4}.
void criterion_comb_cycle_identities() {
    // coefficient lists pinned term by term, then certified independently by
    // the single-vertex instance p_k + q_k = P(C_k;u,x)
    require(comb_poly(1).str() == "u^2*x^2 + x + 1", "p(1,u,x) expansion mismatch");
    require(cycle_p_poly(3).str() == "3*u^2*x^2 + 2*x + 1", "p_3 coefficients mismatch");
    require(cycle_q_poly(3).str() == "u^2*x^3 + x", "q_3 coefficients mismatch");
    require(cycle_p_poly(4).str() == "2*u^2*x^3 + 4*u^2*x^2 + x^2 + 3*x + 1", "p_4 coefficients mismatch");
    require(cycle_q_poly(4).str() == "u^2*x^4 + 2*u^2*x^3 + x^2 + x", "q_4 coefficients mismatch");
    for (int k = 3; k <= 4; ++k)
        require(cycle_p_poly(k) + cycle_q_poly(k) == interlace_P_poly(cycle_all(Graph(1), k)),
                "cycle polynomial pair fails its defining instance, k=" + std::to_string(k));

    auto cleared = [](const BiPoly& pg, int n, const BiPoly& num, const BiPoly& den) {
        BiPoly rhs("u", "x");
        for (int j = 0; j <= n; ++j) {
            BiPoly cj = pg.coeff_of_second(static_cast<unsigned>(j));
            if (cj.is_zero()) continue;
            rhs += cj * num.pow(static_cast<unsigned>(j)) * den.pow(static_cast<unsigned>(n - j));
        }
        return rhs;
    };
    BiPoly x_var = BiPoly::monomial(QSqrt2(1), 0, 1, "u", "x");
    for (const auto& entry : corpus_graphs(5, false)) {
        const Graph& g = entry.graph;
        int n = g.vertex_count();
        BiPoly pg = interlace_P_poly(g);
        for (int k = 1; k <= 3; ++k)
            require(interlace_P_poly(comb_all(g, k)) == cleared(pg, n, x_var, comb_poly(k)),
                    "comb identity failed on " + entry.name + " k=" + std::to_string(k));
        for (int k = 3; k <= 4; ++k)
            require(interlace_P_poly(cycle_all(g, k)) ==
                        cleared(pg, n, cycle_q_poly(k), cycle_p_poly(k)),
                    "cycle identity failed on " + entry.name + " k=" + std::to_string(k));
    }
}

// ---------------------------------------------------------------------------
// 4. Clone rank lemmas, exhaustively over every (corpus graph n <= 6, vertex
//    a, subset A not containing a).
void criterion_rank_lemmas() {
    for (const auto& entry : corpus_graphs(6, false)) {
        const Graph& g = entry.graph;
        int n = g.vertex_count();
        SubsetRanker rg(g);
        for (int a = 0; a < n; ++a) {
            Graph gaa = clone_vertex(g, a);
            SubsetRanker rgaa(gaa);
            std::uint64_t a_bit = std::uint64_t{1} << a;
            std::uint64_t copy_bit = std::uint64_t{1} << n;
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
                if (sub & a_bit) continue;
                bool ok = rgaa.rank(sub) == rg.rank(sub);
                int expect = rg.rank(sub | a_bit);
                ok = ok && rgaa.rank(sub | a_bit) == expect &&
                     rgaa.rank(sub | copy_bit) == expect &&
                     rgaa.rank(sub | a_bit | copy_bit) == expect;
                require(ok, "rank lemma failed on " + entry.name + " a=" + std::to_string(a));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// 5. Interpolation reduction: the cloning pipeline with an exact oracle
//    reproduces P(G;u,.) for corpus n <= 6 and 20 random points.
void criterion_interpolation_reduction() {
    for (const auto& entry : corpus_graphs(6, false)) {
        const Graph& g = entry.graph;
        int n = g.vertex_count();
        if (n < 1) continue;

        // Count tables for every clone tower that fits the evaluation cap;
        // towers beyond it are answered through the (independently verified)
        // cloning identity on the base graph.
        std::unordered_map<int, RankSizeCounts> tables;
        tables.emplace(n, count_rank_size(g));
        for (int i = 2; i <= n + 1; ++i)
            if (i * n <= 18) tables.emplace(i * n, count_rank_size(clone_all(g, i)));

        auto eval_from_counts = [](const RankSizeCounts& t, const QSqrt2& u, const QSqrt2& xi) {
            std::vector<QSqrt2> up{QSqrt2(1)}, xp{QSqrt2(1)};
            for (int i = 1; i <= t.n; ++i) {
                up.push_back(up.back() * u);
                xp.push_back(xp.back() * xi);
            }
            QSqrt2 acc(0);
            for (int k = 0; k <= t.n; ++k)
                for (int r = 0; r <= k; ++r)
                    if (t.count[k][r]) acc += QSqrt2(BigRational(t.count[k][r])) * up[r] * xp[k];
            return acc;
        };

        BiPoly pg = interlace_P_poly(g);
        for (int point = 0; point < 20; ++point) {
            QSqrt2 u = random_value();
            QSqrt2 xi;
            do {
                xi = random_value();
            } while (xi == QSqrt2(0) || xi == QSqrt2(-1) || xi == QSqrt2(-2));

            auto oracle = [&](const Graph& h) -> QSqrt2 {
                auto it = tables.find(h.vertex_count());
                if (it != tables.end()) return eval_from_counts(it->second, u, xi);
                int i = h.vertex_count() / n;
                QSqrt2 node = (QSqrt2(1) + xi).pow(i) - QSqrt2(1);
                return eval_from_counts(tables.at(n), u, node);
            };
            UniPoly got = recover_P_by_cloning(g, u, xi, oracle);
            require(got == pg.eval_first(u),
                    "interpolation reduction failed on " + entry.name + " at u=" + qsqrt2_str(u) +
                        " xi=" + qsqrt2_str(xi));
        }
    }
}

// ---------------------------------------------------------------------------
// 6. Medial pipeline: q(H;2,y) = t(G;y,y) for the embedding corpus,
//    including the worked C3 chain.
void criterion_medial_pipeline() {
    for (const auto& [name, emb] : corpus_embeddings()) {
        MedialIdentityReport report = medial_identity_check(emb);
        require(report.equal, "medial identity failed on " + name + "\n" + report.summary());
    }
    UniPoly expect("y");
    expect.add_term(2, QSqrt2(1));
    expect.add_term(1, QSqrt2(2));
    MedialIdentityReport c3 = medial_identity_check(embedding_cycle(3));
    require(c3.t_side == expect && c3.q_side == expect, "t(C3;y,y) != y^2+2y");
    Graph p3 = parse_edgelist("3 2\n0 1\n1 2\n");
    require(specialize(p3, SpecialPoly::vertex_nullity) == expect, "q(P3;2,y) != y^2+2y");
}

// ---------------------------------------------------------------------------
// 7. Independent-set facts: q(G;1,2) counts independent sets; the I(G;x)
//    coefficients count them per cardinality. 200 random loopless graphs,
//    n <= 12.
void criterion_independent_set_facts() {
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(n, BigRational(1, 2), BigRational(0), 0xc7 * 1000 + i);
        EvalOptions opts{12};

        auto adj = g.adjacency_rows();
        std::vector<BigInt> per_size(static_cast<std::size_t>(n) + 1, 0);
        BigInt total = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            bool independent = true;
            for (int v = 0; v < n && independent; ++v)
                if ((mask >> v) & 1 && (adj[v] & mask)) independent = false;
            if (independent) {
                ++per_size[std::popcount(mask)];
                ++total;
            }
        }

        require(eval_q(g, QSqrt2(1), QSqrt2(2), opts) == QSqrt2(BigRational(total)),
                "q(G;1,2) does not count independent sets");
        UniPoly ip = independent_set_poly(g, opts);
        for (int k = 0; k <= n; ++k)
            require(ip.coeff(static_cast<unsigned>(k)) == QSqrt2(BigRational(per_size[k])),
                    "I(G;x) coefficient " + std::to_string(k) + " mismatch");
    }
}

// ---------------------------------------------------------------------------
// 8. Degree recovery at amplified points, exact and adversarial-at-the-bound
//    oracles, lambda in {1,-3,-1/2}, eps in {1/4,1/2}, loopless corpus
//    n <= 10.
void criterion_degree_recovery() {
    std::vector<QSqrt2> lambdas = {QSqrt2(1), QSqrt2(-3), QSqrt2(BigRational(-1, 2))};
    std::vector<BigRational> epsilons = {BigRational(1, 4), BigRational(1, 2)};
    int runs = 0;
    for (const auto& entry : corpus_graphs(10, true)) {
        const Graph& g = entry.graph;
        if (g.vertex_count() < 1) continue;
        AlphaResult expected = alpha_bruteforce(g);
        for (const auto& lambda : lambdas) {
            for (const auto& eps : epsilons) {
                for (NoiseMode mode : {NoiseMode::exact, NoiseMode::adversarial_at_bound}) {
                    NoisyOracleConfig cfg{lambda, eps, 0x8eed + static_cast<std::uint64_t>(runs), mode};
                    AlphaCandidate got = recover_alpha(g, cfg, make_amplified_oracle(cfg));
                    ++runs;
                    require(got.c == expected.c,
                            "degree recovery failed on " + entry.name + " lambda=" +
                                qsqrt2_str(lambda) + " eps=" + rational_str(eps) +
                                (mode == NoiseMode::exact ? " exact" : " adversarial"));
                    // uniqueness of the bounded candidate is enforced inside
                    // recover_alpha; reaching here certifies it held
                }
            }
        }
    }
    require(runs >= 3 * 2 * 2, "degree recovery exercised too few runs");
}

// ---------------------------------------------------------------------------
// 9. Classifier fidelity at 50 named points.
void criterion_classifier_tables() {
    const QSqrt2 b = QSqrt2::beta();
    const QSqrt2 s = QSqrt2::sqrt2();
    const QSqrt2 one(1), two(2);

    struct Row {
        char kind; // 'q' or 'P'
        QSqrt2 a, bb;
        Status status;
    };
    std::vector<Row> table;

    // vertex-nullity line x=2 (exceptions {0,1,2,1-s,1+s})
    table.push_back({'q', two, QSqrt2(0), Status::Open});
    table.push_back({'q', two, one, Status::Open});
    table.push_back({'q', two, two, Status::PolyTime});
    table.push_back({'q', two, one - s, Status::Open});
    table.push_back({'q', two, one + s, Status::Open});
    table.push_back({'q', two, QSqrt2(3), Status::SharpPHard});
    table.push_back({'q', two, QSqrt2(-1), Status::SharpPHard});
    table.push_back({'q', two, QSqrt2(BigRational(1, 2)), Status::SharpPHard});
    table.push_back({'q', two, QSqrt2(5), Status::SharpPHard});
    table.push_back({'q', two, s, Status::SharpPHard});

    // vertex-rank line y=2 (exceptions {0, 1-b, 1+b} open, 2 poly)
    table.push_back({'q', QSqrt2(0), two, Status::Open});
    table.push_back({'q', one - b, two, Status::Open});
    table.push_back({'q', one + b, two, Status::Open});
    table.push_back({'q', two, two, Status::PolyTime});
    table.push_back({'q', QSqrt2(5), two, Status::SharpPHard});
    table.push_back({'q', QSqrt2(-2), two, Status::SharpPHard});
    table.push_back({'q', QSqrt2(BigRational(7, 2)), two, Status::SharpPHard});
    table.push_back({'q', b, two, Status::SharpPHard});

    // independent-set line x=1 via upsilon = 1+lambda (only lambda=0 easy)
    table.push_back({'q', one, one, Status::PolyTime});
    table.push_back({'q', one, two, Status::SharpPHard});
    table.push_back({'q', one, QSqrt2(0), Status::SharpPHard});
    table.push_back({'q', one, QSqrt2(3), Status::SharpPHard});
    table.push_back({'q', one, QSqrt2(-2), Status::SharpPHard});
    table.push_back({'q', one, one + s, Status::SharpPHard});

    // the diagonal is polynomial time
    table.push_back({'q', QSqrt2(0), QSqrt2(0), Status::PolyTime});
    table.push_back({'q', QSqrt2(-2), QSqrt2(-2), Status::PolyTime});
    table.push_back({'q', b, b, Status::PolyTime});
    table.push_back({'q', QSqrt2(5), QSqrt2(5), Status::PolyTime});

    // the remaining open lines of the q map
    table.push_back({'q', QSqrt2(3), QSqrt2(-1), Status::Open});      // y = 2-x
    table.push_back({'q', QSqrt2(0), two, Status::Open});             // y = 2-x again
    table.push_back({'q', two, one + s, Status::Open});               // y = s(x-1)+1
    table.push_back({'q', QSqrt2(0), one - s, Status::Open});         // y = s(x-1)+1
    table.push_back({'q', two, one - s, Status::Open});               // y = -s(x-1)+1
    table.push_back({'q', QSqrt2(3), QSqrt2(7), Status::SharpPHard}); // generic point
    table.push_back({'q', QSqrt2(-1), QSqrt2(4), Status::SharpPHard});
    table.push_back({'q', s, QSqrt2(0), Status::SharpPHard});

    // P map: easy lines
    table.push_back({'P', one, QSqrt2(7), Status::PolyTime});
    table.push_back({'P', one, QSqrt2(0), Status::PolyTime});
    table.push_back({'P', one, QSqrt2(-2), Status::PolyTime});
    table.push_back({'P', QSqrt2(0), QSqrt2(0), Status::PolyTime});
    table.push_back({'P', QSqrt2(-5), QSqrt2(0), Status::PolyTime});
    table.push_back({'P', b, QSqrt2(0), Status::PolyTime});

    // P map: open verticals u in {-1, -beta, beta} off x=0
    table.push_back({'P', QSqrt2(-1), QSqrt2(2), Status::Open});
    table.push_back({'P', QSqrt2(-1), QSqrt2(-1), Status::Open});
    table.push_back({'P', -b, QSqrt2(3), Status::Open});
    table.push_back({'P', -b, QSqrt2(-2), Status::Open});
    table.push_back({'P', b, QSqrt2(5), Status::Open});
    table.push_back({'P', b, one + s, Status::Open});

    // P map: hard everywhere else
    table.push_back({'P', QSqrt2(0), one, Status::SharpPHard});  // counts independent sets
    table.push_back({'P', QSqrt2(0), QSqrt2(-1), Status::SharpPHard});
    table.push_back({'P', two, QSqrt2(BigRational(1, 2)), Status::SharpPHard});
    table.push_back({'P', s, QSqrt2(-2), Status::SharpPHard});
    table.push_back({'P', QSqrt2(-2), QSqrt2(3), Status::SharpPHard});
    table.push_back({'P', QSqrt2(BigRational(3, 2)), QSqrt2(-1), Status::SharpPHard});

    require(table.size() >= 50, "classifier table holds fewer than 50 points");
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Row& row = table[i];
        Classification got = row.kind == 'q' ? classify_q_point(row.a, row.bb)
                                             : classify_P_point(row.a, row.bb);
        require(got.status == row.status,
                "classifier row " + std::to_string(i) + " (" + row.kind + " at " +
                    qsqrt2_str(row.a) + "," + qsqrt2_str(row.bb) + "): got " +
                    status_str(got.status) + " want " + status_str(row.status));
    }

    // reason tags come from the closed enumeration and name their lines
    require(classification_line(classify_q_point(two, two)) == "POLY q_summary.line_x_eq_y",
            "diagonal reason tag");
    require(classification_line(classify_q_point(two, one)) == "OPEN q_summary.y1_line_equivalence",
            "y=1 reason tag");
    require(classification_line(classify_P_point(one, QSqrt2(5))) == "POLY p_summary.line_u_eq_1",
            "u=1 reason tag");
}

// ---------------------------------------------------------------------------
// 10. Performance sanity: full P(G;u,x) at n=18 under 60 s, n=20 under 5 min.
void criterion_performance() {
    using clock = std::chrono::steady_clock;
    EvalOptions opts{20};

    Graph g18 = random_graph(18, BigRational(1, 2), BigRational(1, 4), 0xbe9);
    auto t0 = clock::now();
    BiPoly p18 = interlace_P_poly(g18, opts);
    double s18 = std::chrono::duration<double>(clock::now() - t0).count();
    require(!p18.is_zero() && p18.degree_in_second() == 18u, "n=18 polynomial malformed");
    require(s18 < 60.0, "n=18 took " + std::to_string(s18) + " s, budget 60 s");

    Graph g20 = random_graph(20, BigRational(1, 2), BigRational(1, 4), 0xbf0);
    t0 = clock::now();
    BiPoly p20 = interlace_P_poly(g20, opts);
    double s20 = std::chrono::duration<double>(clock::now() - t0).count();
    require(!p20.is_zero() && p20.degree_in_second() == 20u, "n=20 polynomial malformed");
    require(s20 < 300.0, "n=20 took " + std::to_string(s20) + " s, budget 300 s");

    std::cout << "       [timing] n=18: " << std::fixed << std::setprecision(2) << s18
              << " s, n=20: " << s20 << " s\n";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "definition consistency (q <-> P formal substitution, 200 graphs)", criterion_definition_consistency},
        {2, "cloning identity (exact polynomial equality, k in {2,3})", criterion_clone_identity},
        {3, "comb and cycle identities (denominator-cleared, verbatim coefficients)", criterion_comb_cycle_identities},
        {4, "clone rank lemmas (exhaustive, n <= 6)", criterion_rank_lemmas},
        {5, "interpolation reduction recovers P(G;u,x) (20 random points/graph)", criterion_interpolation_reduction},
        {6, "medial pipeline identity q(H;2,y) = t(G;y,y)", criterion_medial_pipeline},
        {7, "independent-set counts (q(G;1,2) and I coefficients, 200 graphs)", criterion_independent_set_facts},
        {8, "degree recovery under exact and adversarial oracles", criterion_degree_recovery},
        {9, "classifier fidelity at 50 named points", criterion_classifier_tables},
        {10, "performance sanity (full P at n=18 and n=20)", criterion_performance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << verdict << " [" << std::setw(2) << c.id << "] " << c.title << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)\n";
        if (!detail.empty()) std::cout << "       " << detail << "\n";
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
