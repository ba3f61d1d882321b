#include "interlace/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace interlace {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw DomainError("negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    auto e = std::make_pair(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw DomainError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    edges_.insert(it, e);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool Graph::loopless() const {
    for (auto [u, v] : edges_)
        if (u == v) return false;
    return true;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto [a, b] : edges_) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (auto [a, b] : edges_) {
        if (a == v && b != v) out.push_back(b);
        if (b == v && a != v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_rows() const {
    if (n_ > 64) throw SizeCapError("adjacency rows need n <= 64, got " + std::to_string(n_));
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : edges_) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return rows;
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[v] = std::move(label);
}

std::string Graph::label_or_id(int v) const {
    check_vertex(v);
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError("empty edge list");
    ++lineno;
    std::istringstream head(line);
    long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError("expected 'n m' header", lineno);
    std::string extra;
    if (head >> extra) throw ParseError("trailing tokens after 'n m' header", lineno);
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i), lineno);
        ++lineno;
        std::istringstream es(line);
        long u, v;
        if (!(es >> u >> v)) throw ParseError("expected 'u v'", lineno);
        if (es >> extra) throw ParseError("trailing tokens after edge", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("endpoint out of range in '" + line + "'", lineno);
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty()) throw ParseError("unexpected content after edge list", lineno);
    }
    return g;
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& a) {
    std::vector<int> keep = a;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> newid(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.vertex_count())
            throw DomainError("vertex " + std::to_string(v) + " out of range in induced subgraph");
        newid[v] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(keep.size()));
    for (auto [u, v] : g.edges())
        if (newid[u] >= 0 && newid[v] >= 0) h.add_edge(newid[u], newid[v]);
    return h;
}

Graph induced_subgraph_mask(const Graph& g, std::uint64_t mask) {
    std::vector<int> a;
    for (int v = 0; v < g.vertex_count() && v < 64; ++v)
        if (mask & (std::uint64_t{1} << v)) a.push_back(v);
    return induced_subgraph(g, a);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
    return g;
}

namespace {

bool bernoulli_draw(std::mt19937_64& rng, const BigRational& p) {
    if (p < 0 || p > 1) throw DomainError("probability outside [0,1]");
    std::uint64_t r = rng();
    if (p == 1) return true;
    if (p == 0) return false;
    // accept iff r < floor(p * 2^64); exact at the endpoints.
    BigInt threshold = (num(p) << 64) / den(p);
    return BigInt(r) < threshold;
}

} // namespace

Graph random_graph(int n, const BigRational& edge_probability,
                   const BigRational& loop_probability, std::uint64_t seed) {
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (int u = 0; u < n; ++u) {
        if (bernoulli_draw(rng, loop_probability)) g.add_edge(u, u);
        for (int v = u + 1; v < n; ++v)
            if (bernoulli_draw(rng, edge_probability)) g.add_edge(u, v);
    }
    return g;
}

} // namespace interlace
