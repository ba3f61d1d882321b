#include "interlace/transforms.hpp"

namespace interlace {

namespace {

void check_size(long n, int max_vertices, const char* what) {
    if (n > max_vertices)
        throw SizeCapError(std::string(what) + " would create " + std::to_string(n) +
                           " vertices, cap is " + std::to_string(max_vertices));
}

void carry_labels(const Graph& from, Graph& to) {
    for (int v = 0; v < from.vertex_count(); ++v) to.set_label(v, from.label_or_id(v));
}

} // namespace

Graph clone_vertex(const Graph& g, int a) {
    int n = g.vertex_count();
    if (a < 0 || a >= n) throw DomainError("clone_vertex: vertex " + std::to_string(a) + " out of range");
    Graph h(n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    int copy = n;
    for (int w : g.neighbors(a)) h.add_edge(copy, w);
    if (g.has_loop(a)) {
        h.add_edge(a, copy);
        h.add_edge(copy, copy);
    }
    carry_labels(g, h);
    h.set_label(copy, g.label_or_id(a) + "'");
    return h;
}

Graph clone_all(const Graph& g, int k, int max_vertices) {
    if (k < 1) throw DomainError("clone_all needs k >= 1");
    int n = g.vertex_count();
    check_size(static_cast<long>(n) * k, max_vertices, "clone_all");
    // Class of original a: {a} followed by its copies, which sit at
    // n + a*(k-1) + c for copy index c in [0, k-1).
    auto member = [&](int a, int c) { return c == 0 ? a : n + a * (k - 1) + (c - 1); };
    Graph h(n * k);
    for (int a = 0; a < n; ++a) {
        bool loop = g.has_loop(a);
        for (int c = 0; c < k; ++c) {
            if (loop) h.add_edge(member(a, c), member(a, c));
            for (int d = c + 1; d < k; ++d)
                if (loop) h.add_edge(member(a, c), member(a, d));
        }
    }
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;
        for (int c = 0; c < k; ++c)
            for (int d = 0; d < k; ++d) h.add_edge(member(u, c), member(v, d));
    }
    carry_labels(g, h);
    for (int a = 0; a < n; ++a)
        for (int c = 1; c < k; ++c)
            h.set_label(member(a, c), g.label_or_id(a) + "'" + std::to_string(c));
    return h;
}

Graph comb_vertex(const Graph& g, int a, int k, int max_vertices) {
    if (k < 1) throw DomainError("comb needs k >= 1");
    int n = g.vertex_count();
    if (a < 0 || a >= n) throw DomainError("comb_vertex: vertex " + std::to_string(a) + " out of range");
    check_size(static_cast<long>(n) + k, max_vertices, "comb_vertex");
    Graph h(n + k);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int j = 0; j < k; ++j) h.add_edge(a, n + j);
    carry_labels(g, h);
    for (int j = 0; j < k; ++j) h.set_label(n + j, g.label_or_id(a) + ".leaf" + std::to_string(j));
    return h;
}

Graph comb_all(const Graph& g, int k, int max_vertices) {
    if (k < 1) throw DomainError("comb needs k >= 1");
    int n = g.vertex_count();
    check_size(static_cast<long>(n) * (k + 1), max_vertices, "comb_all");
    Graph h(n * (k + 1));
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < k; ++j) h.add_edge(a, n + a * k + j);
    carry_labels(g, h);
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < k; ++j)
            h.set_label(n + a * k + j, g.label_or_id(a) + ".leaf" + std::to_string(j));
    return h;
}

namespace {

// Adds the k-cycle path for vertex a, with the k-1 new vertices starting
// at id base.
void attach_cycle(Graph& h, int a, int k, int base) {
    h.add_edge(a, base);
    for (int j = 1; j < k - 1; ++j) h.add_edge(base + j - 1, base + j);
    h.add_edge(a, base + k - 2);
}

} // namespace

Graph cycle_vertex(const Graph& g, int a, int k, int max_vertices) {
    if (k < 3) throw DomainError("cycle needs k >= 3");
    int n = g.vertex_count();
    if (a < 0 || a >= n) throw DomainError("cycle_vertex: vertex " + std::to_string(a) + " out of range");
    check_size(static_cast<long>(n) + (k - 1), max_vertices, "cycle_vertex");
    Graph h(n + k - 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    attach_cycle(h, a, k, n);
    carry_labels(g, h);
    for (int j = 0; j < k - 1; ++j) h.set_label(n + j, g.label_or_id(a) + ".cyc" + std::to_string(j));
    return h;
}

Graph cycle_all(const Graph& g, int k, int max_vertices) {
    if (k < 3) throw DomainError("cycle needs k >= 3");
    int n = g.vertex_count();
    check_size(static_cast<long>(n) * k, max_vertices, "cycle_all");
    Graph h(n * k);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int a = 0; a < n; ++a) attach_cycle(h, a, k, n + a * (k - 1));
    carry_labels(g, h);
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < k - 1; ++j)
            h.set_label(n + a * (k - 1) + j, g.label_or_id(a) + ".cyc" + std::to_string(j));
    return h;
}

BiPoly comb_poly(int k) {
    if (k < 1) throw DomainError("comb_poly needs k >= 1");
    BiPoly one_plus_x("u", "x"), xu2("u", "x");
    one_plus_x.add_term(0, 0, QSqrt2(1));
    one_plus_x.add_term(0, 1, QSqrt2(1));
    xu2.add_term(2, 1, QSqrt2(1));
    BiPoly xu2_plus_1 = xu2;
    xu2_plus_1.add_term(0, 0, QSqrt2(1));
    return one_plus_x.pow(static_cast<unsigned>(k)) * xu2_plus_1 - xu2;
}

BiPoly cycle_p_poly(int k) {
    BiPoly p("u", "x");
    if (k == 3) {
        // 1 + 2x + 3 x^2 u^2
        p.add_term(0, 0, QSqrt2(1));
        p.add_term(0, 1, QSqrt2(2));
        p.add_term(2, 2, QSqrt2(3));
    } else if (k == 4) {
        // 1 + 3x + x^2 + 4 x^2 u^2 + 2 x^3 u^2. Derived from the corner case
        // analysis of the 4-cycle gadget; the minimal instance pins it down:
        // p_4 + q_4 must equal P(C4;u,x) = 1+4x+2x^2+4u^2x^2+4u^2x^3+u^2x^4.
        p.add_term(0, 0, QSqrt2(1));
        p.add_term(0, 1, QSqrt2(3));
        p.add_term(0, 2, QSqrt2(1));
        p.add_term(2, 2, QSqrt2(4));
        p.add_term(2, 3, QSqrt2(2));
    } else {
        throw DomainError("cycle polynomials are only available for k in {3,4}");
    }
    return p;
}

BiPoly cycle_q_poly(int k) {
    BiPoly q("u", "x");
    if (k == 3) {
        // x + x^3 u^2
        q.add_term(0, 1, QSqrt2(1));
        q.add_term(2, 3, QSqrt2(1));
    } else if (k == 4) {
        // x + x^2 + 2 x^3 u^2 + x^4 u^2
        q.add_term(0, 1, QSqrt2(1));
        q.add_term(0, 2, QSqrt2(1));
        q.add_term(2, 3, QSqrt2(2));
        q.add_term(2, 4, QSqrt2(1));
    } else {
        throw DomainError("cycle polynomials are only available for k in {3,4}");
    }
    return q;
}

} // namespace interlace
