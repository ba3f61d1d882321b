#include "interlace/embedding.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace interlace {

Graph PlanarEmbedding::underlying() const {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void PlanarEmbedding::validate() const {
    if (n <= 0) throw DomainError("embedding needs at least one vertex");
    if (static_cast<int>(rotation.size()) != n)
        throw DomainError("embedding needs one rotation per vertex");
    std::vector<std::pair<int, int>> normalized;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("embedding edge endpoint out of range");
        if (u == v) throw DomainError("loops are rejected in the medial pipeline");
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
        throw DomainError("parallel edges are rejected in the medial pipeline");
    // Each endpoint must list each incident edge exactly once.
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (int e = 0; e < edge_count(); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    for (int v = 0; v < n; ++v) {
        auto sorted_rot = rotation[v];
        std::sort(sorted_rot.begin(), sorted_rot.end());
        auto want = incident[v];
        std::sort(want.begin(), want.end());
        if (sorted_rot != want)
            throw DomainError("rotation at vertex " + std::to_string(v) +
                              " does not list the incident edges exactly once");
    }
    // Connectivity.
    if (edge_count() == 0 && n > 1) throw DomainError("embedding graph is disconnected");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int e : rotation[v]) {
            int w = edges[e].first == v ? edges[e].second : edges[e].first;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                bfs.push(w);
            }
        }
    }
    if (reached != n) throw DomainError("embedding graph is disconnected");
}

int dart_tail(const PlanarEmbedding& emb, int dart) {
    auto [u, v] = emb.edges[dart / 2];
    return dart % 2 == 0 ? u : v;
}

int dart_head(const PlanarEmbedding& emb, int dart) {
    auto [u, v] = emb.edges[dart / 2];
    return dart % 2 == 0 ? v : u;
}

std::vector<std::vector<int>> trace_faces(const PlanarEmbedding& emb) {
    emb.validate();
    int m = emb.edge_count();
    if (m == 0) return {}; // single vertex: one implicit face, nothing to trace

    // Position of each edge in each endpoint's rotation, for successor lookup.
    std::vector<std::vector<int>> rot_pos(static_cast<std::size_t>(emb.n),
                                          std::vector<int>(static_cast<std::size_t>(m), -1));
    for (int v = 0; v < emb.n; ++v)
        for (std::size_t i = 0; i < emb.rotation[v].size(); ++i)
            rot_pos[v][emb.rotation[v][i]] = static_cast<int>(i);

    auto next_dart = [&](int d) {
        int e = d / 2;
        int v = dart_head(emb, d); // reverse dart leaves v along e
        const auto& rot = emb.rotation[v];
        int i = rot_pos[v][e];
        int e2 = rot[(i + 1) % rot.size()];
        // The successor dart leaves v along e2.
        return emb.edges[e2].first == v ? 2 * e2 : 2 * e2 + 1;
    };

    std::vector<char> used(static_cast<std::size_t>(2 * m), 0);
    std::vector<std::vector<int>> faces;
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (used[d0]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            used[d] = 1;
            face.push_back(d);
            d = next_dart(d);
        } while (d != d0);
        faces.push_back(std::move(face));
    }
    long f = static_cast<long>(faces.size());
    if (emb.n - m + f != 2)
        throw DomainError("not a planar embedding: Euler formula gives " + std::to_string(emb.n) +
                          " - " + std::to_string(m) + " + " + std::to_string(f) + " != 2");
    return faces;
}

PlanarEmbedding parse_rotation_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() {
        if (!std::getline(in, line)) throw ParseError("unexpected end of rotation system", lineno);
        ++lineno;
    };
    next_line();
    std::istringstream head(line);
    long n = -1, m = -1;
    if (!(head >> n >> m) || n <= 0 || m < 0) throw ParseError("expected 'n m' header", lineno);
    PlanarEmbedding emb;
    emb.n = static_cast<int>(n);
    for (long e = 0; e < m; ++e) {
        next_line();
        std::istringstream es(line);
        long u, v;
        if (!(es >> u >> v)) throw ParseError("expected 'u v'", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("endpoint out of range", lineno);
        emb.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    emb.rotation.assign(static_cast<std::size_t>(n), {});
    for (long v = 0; v < n; ++v) {
        next_line();
        std::istringstream rs(line);
        std::string kw;
        long vid = -1;
        char colon = 0;
        if (!(rs >> kw >> vid >> colon) || kw != "rot" || colon != ':' || vid != v)
            throw ParseError("expected 'rot " + std::to_string(v) + ": ...'", lineno);
        long e;
        while (rs >> e) {
            if (e < 0 || e >= m) throw ParseError("edge id out of range", lineno);
            emb.rotation[v].push_back(static_cast<int>(e));
        }
    }
    try {
        emb.validate();
    } catch (const DomainError& err) {
        throw ParseError(err.what(), lineno);
    }
    return emb;
}

std::string to_rotation_system(const PlanarEmbedding& emb) {
    std::ostringstream out;
    out << emb.n << " " << emb.edge_count() << "\n";
    for (auto [u, v] : emb.edges) out << u << " " << v << "\n";
    for (int v = 0; v < emb.n; ++v) {
        out << "rot " << v << ":";
        for (int e : emb.rotation[v]) out << " " << e;
        out << "\n";
    }
    return out.str();
}

} // namespace interlace
