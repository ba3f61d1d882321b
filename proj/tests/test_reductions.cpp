#include <doctest.h>

#include <random>

#include "interlace/corpus.hpp"
#include "interlace/interlace_eval.hpp"
#include "interlace/reductions.hpp"
#include "interlace/transforms.hpp"

using namespace interlace;

namespace {

std::mt19937_64 rng(0x5edc);

BigRational small_rational() {
    long n = static_cast<long>(rng() % 19) - 9;
    long d = static_cast<long>(rng() % 4) + 1;
    return BigRational(n, d);
}

QSqrt2 random_value() { return QSqrt2(small_rational(), small_rational()); }

QSqrt2 beta() { return QSqrt2::beta(); }

} // namespace

TEST_CASE("comb point maps") {
    // k=1: p = (1+x)(xu^2+1) - xu^2 = 1 + x + x^2 u^2
    QSqrt2 u = random_value(), xi = random_value();
    QSqrt2 p = QSqrt2(1) + xi + xi * xi * u * u;
    if (!p.is_zero()) {
        PointMap m = comb_point_map(1, u, xi);
        CHECK(m.scale == p);
        CHECK(m.target.second == xi * p.inverse());
        CHECK(m.target.first == u);
    }

    // (1,-1) is a fixed point for every k
    for (int k = 1; k <= 5; ++k) {
        PointMap m = comb_point_map(k, QSqrt2(1), QSqrt2(-1));
        CHECK(m.scale == QSqrt2(1));
        CHECK(m.target == std::make_pair(QSqrt2(1), QSqrt2(-1)));
    }

    // (beta,-1) with k=1 reaches (beta,-2)
    PointMap m = comb_point_map(1, beta(), QSqrt2(-1));
    CHECK(m.target == std::make_pair(beta(), QSqrt2(-2)));

    // p(1,u,x) = 0 at u=1, x solving x^2+x+1=0 has no Q(sqrt2) root; use
    // k=1, u=s, xi with 1+xi+2xi^2=0 -> xi=-1 gives 2-1+... pick explicit zero:
    // p(1, s, -1) = 1 - 1 + 2 = 2 nonzero; craft zero via u^2 = -(1+xi)/xi^2:
    // xi=-2, u^2 = 1/4 -> u = 1/2.
    CHECK_THROWS_AS(comb_point_map(1, QSqrt2(BigRational(1, 2)), QSqrt2(-2)), DomainError);
}

TEST_CASE("cycle point maps") {
    PointMap m3 = cycle_point_map(3, QSqrt2(0), QSqrt2(-1));
    CHECK(m3.target == std::make_pair(QSqrt2(0), QSqrt2(1)));

    // x=-2 is a fixed point of the 4-cycle map: p_4(u,-2) = -1, q_4(u,-2) = 2
    for (int i = 0; i < 5; ++i) {
        QSqrt2 u = random_value();
        PointMap m4 = cycle_point_map(4, u, QSqrt2(-2));
        CHECK(m4.target == std::make_pair(u, QSqrt2(-2)));
        CHECK(m4.scale == QSqrt2(-1));
    }

    QSqrt2 u = random_value();
    PointMap m0 = cycle_point_map(3, u, QSqrt2(0));
    CHECK(m0.target == std::make_pair(u, QSqrt2(0)));
    CHECK(m0.scale == QSqrt2(1));

    // p_4(u,-1) = -1 + 2u^2 vanishes at u = 1/sqrt2
    CHECK_THROWS_AS(cycle_point_map(4, QSqrt2::beta(), QSqrt2(-1)), DomainError);
    CHECK(cycle_point_map(4, QSqrt2(1), QSqrt2(-1)).target ==
          std::make_pair(QSqrt2(1), QSqrt2(-1)));
    CHECK_THROWS_AS(cycle_point_map(5, QSqrt2(1), QSqrt2(1)), DomainError);
}

TEST_CASE("clone point maps for q") {
    QSqrt2 xi = random_value(), upsilon = random_value();
    PointMap id = clone_point_map_q(1, xi, upsilon);
    CHECK(id.target == std::make_pair(xi, upsilon));
    CHECK(id.scale == QSqrt2(1));

    PointMap m = clone_point_map_q(2, QSqrt2(2), QSqrt2(-1));
    CHECK(m.target == std::make_pair(QSqrt2(1), QSqrt2(1)));

    PointMap limit = clone_point_map_q(3, QSqrt2(2), QSqrt2(1));
    CHECK(limit.target == std::make_pair(QSqrt2(4), QSqrt2(1)));
}

TEST_CASE("point map soundness against the transforms") {
    for (const auto& entry : corpus_graphs(4, false)) {
        const Graph& g = entry.graph;
        int n = g.vertex_count();
        EvalOptions opts{24};
        for (int trial = 0; trial < 2; ++trial) {
            QSqrt2 u = random_value(), xi = random_value();

            for (int k = 1; k <= 3; ++k) {
                QSqrt2 p = comb_poly(k).eval(u, xi);
                if (p.is_zero()) continue;
                PointMap m = comb_point_map(k, u, xi);
                CHECK(eval_P(comb_all(g, k), m.source.first, m.source.second, opts) ==
                      m.scale.pow(n) * eval_P(g, m.target.first, m.target.second, opts));
            }
            for (int k = 3; k <= 4; ++k) {
                if (n * k > 20) continue;
                QSqrt2 p = cycle_p_poly(k).eval(u, xi);
                if (p.is_zero()) continue;
                PointMap m = cycle_point_map(k, u, xi);
                CHECK(eval_P(cycle_all(g, k), m.source.first, m.source.second, opts) ==
                      m.scale.pow(n) * eval_P(g, m.target.first, m.target.second, opts));
            }
            for (int k = 2; k <= 3; ++k) {
                QSqrt2 q_xi = random_value(), q_up = random_value();
                PointMap m = clone_point_map_q(k, q_xi, q_up);
                CHECK(eval_q(clone_all(g, k), m.source.first, m.source.second, opts) ==
                      eval_q(g, m.target.first, m.target.second, opts));
            }
        }
    }
}

TEST_CASE("interpolation recovery of P from one point") {
    Graph k2 = parse_edgelist("2 1\n0 1\n");
    auto exact_oracle = [](const QSqrt2& u, const QSqrt2& xi) {
        return [u, xi](const Graph& h) { return eval_P(h, u, xi, {.max_vertices = 24}); };
    };

    UniPoly rec = recover_P_by_cloning(k2, QSqrt2(1), QSqrt2(1), exact_oracle(QSqrt2(1), QSqrt2(1)));
    UniPoly expect("x"); // (1+x)^2
    expect.add_term(2, QSqrt2(1));
    expect.add_term(1, QSqrt2(2));
    expect.add_term(0, QSqrt2(1));
    CHECK(rec == expect);

    QSqrt2 u = QSqrt2(0) + QSqrt2::sqrt2();
    UniPoly rec2 = recover_P_by_cloning(k2, u, QSqrt2(1), exact_oracle(u, QSqrt2(1)));
    UniPoly expect2("x"); // 1 + 2x + u^2 x^2 with u^2 = 2
    expect2.add_term(2, QSqrt2(2));
    expect2.add_term(1, QSqrt2(2));
    expect2.add_term(0, QSqrt2(1));
    CHECK(rec2 == expect2);
    CHECK(rec2 == interlace_P_poly(k2).eval_first(u));

    CHECK_THROWS_AS(recover_P_by_cloning(k2, u, QSqrt2(-2), exact_oracle(u, QSqrt2(-2))),
                    DomainError);
    CHECK_THROWS_AS(recover_P_by_cloning(k2, u, QSqrt2(0), exact_oracle(u, QSqrt2(0))),
                    DomainError);

    for (const auto& entry : corpus_graphs(3, false)) {
        for (int trial = 0; trial < 3; ++trial) {
            QSqrt2 uu = random_value(), xi;
            do {
                xi = random_value();
            } while (xi == QSqrt2(0) || xi == QSqrt2(-1) || xi == QSqrt2(-2));
            UniPoly got = recover_P_by_cloning(entry.graph, uu, xi, exact_oracle(uu, xi));
            CHECK(got == interlace_P_poly(entry.graph).eval_first(uu));
        }
    }
}

TEST_CASE("interpolation recovery of q on the y=1 line") {
    auto oracle = [](const Graph& h, const QSqrt2& x) {
        return eval_q(h, x, QSqrt2(1), {.max_vertices = 24});
    };
    Graph e2(2);
    CHECK(recover_q_on_y1_line(e2, oracle, QSqrt2(3)) == UniPoly::constant(QSqrt2(1)));

    Graph k2 = parse_edgelist("2 1\n0 1\n");
    UniPoly expect("x"); // x^2 - 2x + 2
    expect.add_term(2, QSqrt2(1));
    expect.add_term(1, QSqrt2(-2));
    expect.add_term(0, QSqrt2(2));
    CHECK(recover_q_on_y1_line(k2, oracle, QSqrt2(5)) == expect);
    CHECK(recover_q_on_y1_line(k2, oracle, QSqrt2(BigRational(1, 2))) == expect);

    CHECK_THROWS_AS(recover_q_on_y1_line(k2, oracle, QSqrt2(1)), DomainError);
}

TEST_CASE("classifier on named points") {
    QSqrt2 b = beta(), s = QSqrt2::sqrt2();

    CHECK(classification_line(classify_q_point(QSqrt2(2), QSqrt2(2))) == "POLY q_summary.line_x_eq_y");
    CHECK(classify_q_point(QSqrt2(2), QSqrt2(3)).status == Status::SharpPHard);
    CHECK(classify_q_point(QSqrt2(2), QSqrt2(1) + s).status == Status::Open);
    CHECK(classify_q_point(QSqrt2(1) - b, QSqrt2(2)).status == Status::Open);
    CHECK(classify_q_point(QSqrt2(5), QSqrt2(2)).status == Status::SharpPHard);

    CHECK(classification_line(classify_P_point(QSqrt2(1), QSqrt2(7))) == "POLY p_summary.line_u_eq_1");
    CHECK(classify_P_point(QSqrt2(0), QSqrt2(-1)).status == Status::SharpPHard);
    CHECK(classify_P_point(b, QSqrt2(5)).status == Status::Open);
    CHECK(classify_P_point(QSqrt2(-1), QSqrt2(2)).status == Status::Open);
    CHECK(classify_P_point(QSqrt2(3), QSqrt2(0)).status == Status::PolyTime);
}

TEST_CASE("classifier exception sets on the special lines") {
    QSqrt2 b = beta(), s = QSqrt2::sqrt2();

    // vertex-nullity line x=2: not poly-time except v in {0,1,2,1-s,1+s}
    std::vector<QSqrt2> qn_exceptions = {QSqrt2(0), QSqrt2(1), QSqrt2(2), QSqrt2(1) - s, QSqrt2(1) + s};
    for (int num = -12; num <= 12; ++num)
        for (int den = 1; den <= 2; ++den) {
            QSqrt2 v(BigRational(num, den));
            bool exceptional = false;
            for (const auto& e : qn_exceptions) exceptional |= (v == e);
            CHECK((classify_q_point(QSqrt2(2), v).status == Status::SharpPHard) == !exceptional);
        }
    for (const auto& e : qn_exceptions)
        CHECK(classify_q_point(QSqrt2(2), e).status != Status::SharpPHard);

    // vertex-rank line y=2: hard except xi in {0, 1-beta, 1+beta} open, 2 poly
    std::vector<QSqrt2> qr_exceptions = {QSqrt2(0), QSqrt2(1) - b, QSqrt2(1) + b, QSqrt2(2)};
    for (int num = -12; num <= 12; ++num)
        for (int den = 1; den <= 2; ++den) {
            QSqrt2 xi(BigRational(num, den));
            bool exceptional = false;
            for (const auto& e : qr_exceptions) exceptional |= (xi == e);
            CHECK((classify_q_point(xi, QSqrt2(2)).status == Status::SharpPHard) == !exceptional);
        }
    CHECK(classify_q_point(QSqrt2(2), QSqrt2(2)).status == Status::PolyTime);
    CHECK(classify_q_point(QSqrt2(1) - b, QSqrt2(2)).status == Status::Open);
    CHECK(classify_q_point(QSqrt2(1) + b, QSqrt2(2)).status == Status::Open);
    CHECK(classify_q_point(QSqrt2(0), QSqrt2(2)).status == Status::Open);

    // independent set line x=1 via v = 1+lambda: hard except lambda = 0
    for (int num = -8; num <= 8; ++num) {
        QSqrt2 lambda(BigRational(num, 2));
        Status st = classify_q_point(QSqrt2(1), QSqrt2(1) + lambda).status;
        if (lambda.is_zero())
            CHECK(st == Status::PolyTime);
        else
            CHECK(st == Status::SharpPHard);
    }
}

TEST_CASE("q and P classifiers agree through the coordinate change") {
    for (int trial = 0; trial < 200; ++trial) {
        QSqrt2 xi = random_value(), upsilon = random_value();
        if (upsilon == QSqrt2(1)) continue;
        Status sq = classify_q_point(xi, upsilon).status;
        QSqrt2 u = (xi - QSqrt2(1)) * (upsilon - QSqrt2(1)).inverse();
        Status sp = classify_P_point(u, upsilon - QSqrt2(1)).status;
        CHECK(sq == sp);
    }
}
