#include "interlace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "interlace/independence.hpp"
#include "interlace/interlace_eval.hpp"
#include "interlace/medial.hpp"
#include "interlace/reductions.hpp"
#include "interlace/selftest.hpp"
#include "interlace/transforms.hpp"

namespace interlace {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

QSqrt2 point_component(const std::vector<std::string>& tokens, std::size_t offset) {
    return parse_qsqrt2(tokens[offset], tokens[offset + 1]);
}

struct Args {
    std::string kind, op, input, embedding;
    std::vector<std::string> point;  // 4 tokens: two QSqrt2 values
    std::vector<std::string> lambda; // 2 tokens
    std::string epsilon = "1/2";
    int k = 1;
    int cap = 20;
    std::uint64_t seed = 0;
    bool noisy = false;
    bool exact = false;
    bool grid = false;
};

int run_poly(const Args& a, std::ostream& out) {
    Graph g = parse_edgelist(slurp(a.input));
    EvalOptions opts{a.cap};
    std::string s;
    if (a.kind == "q")
        s = interlace_q_poly(g, opts).str();
    else if (a.kind == "P")
        s = interlace_P_poly(g, opts).str();
    else if (a.kind == "qn")
        s = specialize(g, SpecialPoly::vertex_nullity, opts).str();
    else if (a.kind == "qr")
        s = specialize(g, SpecialPoly::vertex_rank, opts).str();
    else if (a.kind == "is")
        s = independent_set_poly(g, opts).str();
    else
        throw CLI::ValidationError("--kind must be one of q|P|qn|qr|is");
    out << s << "\n";
    return 0;
}

int run_eval(const Args& a, std::ostream& out) {
    Graph g = parse_edgelist(slurp(a.input));
    EvalOptions opts{a.cap};
    QSqrt2 first = point_component(a.point, 0);
    QSqrt2 second = point_component(a.point, 2);
    QSqrt2 value;
    if (a.kind == "q")
        value = eval_q(g, first, second, opts);
    else if (a.kind == "P")
        value = eval_P(g, first, second, opts);
    else
        throw CLI::ValidationError("--kind must be q or P");
    out << qsqrt2_str(value) << "\n";
    return 0;
}

int run_transform(const Args& a, std::ostream& out) {
    Graph g = parse_edgelist(slurp(a.input));
    Graph h;
    if (a.op == "clone")
        h = clone_all(g, a.k);
    else if (a.op == "comb")
        h = comb_all(g, a.k);
    else if (a.op == "cycle")
        h = cycle_all(g, a.k);
    else
        throw CLI::ValidationError("--op must be clone|comb|cycle");
    out << to_edgelist(h);
    return 0;
}

void print_grid(const std::string& kind, std::ostream& out) {
    // Integer window of the complexity map; P=poly-time, #=hard, o=open.
    out << "   ";
    for (int x = -3; x <= 3; ++x) out << " " << (x < 0 ? "" : " ") << x;
    out << "\n";
    for (int y = 3; y >= -3; --y) {
        out << (y < 0 ? "" : " ") << y << " ";
        for (int x = -3; x <= 3; ++x) {
            Classification c = kind == "q" ? classify_q_point(QSqrt2(x), QSqrt2(y))
                                           : classify_P_point(QSqrt2(x), QSqrt2(y));
            char mark = c.status == Status::PolyTime ? 'P'
                        : c.status == Status::SharpPHard ? '#'
                                                         : 'o';
            out << "  " << mark;
        }
        out << "\n";
    }
}

int run_classify(const Args& a, std::ostream& out) {
    if (a.kind != "q" && a.kind != "P") throw CLI::ValidationError("--kind must be q or P");
    if (a.grid) {
        print_grid(a.kind, out);
        return 0;
    }
    QSqrt2 first = point_component(a.point, 0);
    QSqrt2 second = point_component(a.point, 2);
    Classification c = a.kind == "q" ? classify_q_point(first, second)
                                     : classify_P_point(first, second);
    out << classification_line(c) << "\n";
    return 0;
}

int run_medial_check(const Args& a, std::ostream& out) {
    PlanarEmbedding emb = parse_rotation_system(slurp(a.embedding));
    MedialIdentityReport report = medial_identity_check(emb);
    out << report.summary();
    return report.equal ? 0 : 1;
}

int run_recover_alpha(const Args& a, std::ostream& out) {
    Graph g = parse_edgelist(slurp(a.input));
    NoisyOracleConfig cfg;
    cfg.lambda = point_component(a.lambda, 0);
    cfg.epsilon = parse_rational(a.epsilon);
    cfg.seed = a.seed;
    cfg.mode = a.noisy ? NoiseMode::random_within_bound : NoiseMode::exact;
    AlphaCandidate got = recover_alpha(g, cfg, make_amplified_oracle(cfg));
    out << "alpha=" << got.c << " N_estimate=" << qsqrt2_str(got.n_estimate)
        << " l=" << got.l << "\n";
    return 0;
}

int run_selftest_cmd(const Args& a, std::ostream& out) {
    bool all_pass = true;
    for (const auto& r : run_selftest(a.seed)) {
        if (r.pass) {
            out << "PASS " << r.group << "\n";
        } else {
            all_pass = false;
            out << "FAIL " << r.group << ": " << r.detail << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for interlace-type graph polynomials"};
    app.require_subcommand(1);
    Args a;

    auto* poly = app.add_subcommand("poly", "print a graph polynomial in canonical form");
    poly->add_option("--kind", a.kind, "q|P|qn|qr|is")->required();
    poly->add_option("--input", a.input, "edge-list file")->required();
    poly->add_option("--cap", a.cap, "max vertices for subset expansion");

    auto* eval = app.add_subcommand("eval", "evaluate q or P at an exact point");
    eval->add_option("--kind", a.kind, "q|P")->required();
    eval->add_option("--point", a.point, "four rationals: a b c d meaning (a+b*s, c+d*s)")
        ->expected(4)
        ->required();
    eval->add_option("--input", a.input, "edge-list file")->required();
    eval->add_option("--cap", a.cap, "max vertices for subset expansion");

    auto* transform = app.add_subcommand("transform", "apply clone/comb/cycle at every vertex");
    transform->add_option("--op", a.op, "clone|comb|cycle")->required();
    transform->add_option("--k", a.k, "transformation parameter")->required();
    transform->add_option("--input", a.input, "edge-list file")->required();

    auto* classify = app.add_subcommand("classify", "evaluation-complexity verdict for a point");
    classify->add_option("--kind", a.kind, "q|P")->required();
    auto* point_opt = classify->add_option("--point", a.point, "four rationals: a b c d")->expected(4);
    classify->add_flag("--grid", a.grid, "print the integer-window complexity map");
    classify->callback([&]() {
        if (!a.grid && point_opt->count() == 0)
            throw CLI::RequiredError("--point (or --grid)");
    });

    auto* medial = app.add_subcommand("medial-check", "circle-graph/Tutte identity report");
    medial->add_option("--embedding", a.embedding, "rotation-system file")->required();

    auto* recover = app.add_subcommand("recover-alpha", "independence number from an approximate oracle");
    recover->add_option("--input", a.input, "edge-list file")->required();
    recover->add_option("--lambda", a.lambda, "base point: two rationals a b meaning a+b*s")
        ->expected(2)
        ->required();
    recover->add_option("--epsilon", a.epsilon, "accuracy exponent in (0,1), e.g. 1/2");
    recover->add_option("--seed", a.seed, "noise seed");
    recover->add_flag("--noisy", a.noisy, "perturb the oracle within the allowed bound");
    recover->add_flag("--exact", a.exact, "use the exact oracle (default)");

    auto* selftest = app.add_subcommand("selftest", "run the property suite");
    selftest->add_option("--seed", a.seed, "suite seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (poly->parsed()) return run_poly(a, out);
        if (eval->parsed()) return run_eval(a, out);
        if (transform->parsed()) return run_transform(a, out);
        if (classify->parsed()) return run_classify(a, out);
        if (medial->parsed()) return run_medial_check(a, out);
        if (recover->parsed()) return run_recover_alpha(a, out);
        if (selftest->parsed()) return run_selftest_cmd(a, out);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace interlace
