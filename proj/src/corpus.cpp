#include "interlace/corpus.hpp"

namespace interlace {

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph clique(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

} // namespace

std::vector<CorpusEntry> named_small_graphs() {
    std::vector<CorpusEntry> out;
    out.push_back({"E1", Graph(1)});
    out.push_back({"E2", Graph(2)});
    out.push_back({"E3", Graph(3)});
    out.push_back({"K2", clique(2)});
    out.push_back({"K3", clique(3)});
    out.push_back({"K4", clique(4)});
    out.push_back({"P3", path(3)});
    out.push_back({"P4", path(4)});
    out.push_back({"C4", cycle(4)});
    out.push_back({"C5", cycle(5)});
    out.push_back({"C6", cycle(6)});
    out.push_back({"star3", star(3)});
    {
        Graph g(1);
        g.add_edge(0, 0);
        out.push_back({"loop1", g});
    }
    {
        Graph g = clique(2);
        g.add_edge(0, 0);
        out.push_back({"K2+loop", g});
    }
    {
        Graph g = path(3);
        g.add_edge(1, 1);
        out.push_back({"P3+midloop", g});
    }
    {
        // two triangles sharing a vertex
        Graph g(5);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 0);
        g.add_edge(0, 3);
        g.add_edge(3, 4);
        g.add_edge(4, 0);
        out.push_back({"bowtie", g});
    }
    return out;
}

std::vector<CorpusEntry> seeded_random_graphs(int max_n, bool allow_loops) {
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= max_n; ++n) {
        out.push_back({"rand-sparse-n" + std::to_string(n),
                       random_graph(n, BigRational(1, 3), allow_loops ? BigRational(1, 4) : BigRational(0),
                                    0x1000 + static_cast<std::uint64_t>(n))});
        out.push_back({"rand-half-n" + std::to_string(n),
                       random_graph(n, BigRational(1, 2), BigRational(0),
                                    0x2000 + static_cast<std::uint64_t>(n))});
        out.push_back({"rand-dense-n" + std::to_string(n),
                       random_graph(n, BigRational(3, 4), allow_loops ? BigRational(1, 3) : BigRational(0),
                                    0x3000 + static_cast<std::uint64_t>(n))});
    }
    return out;
}

std::vector<CorpusEntry> corpus_graphs(int max_n, bool loopless_only) {
    std::vector<CorpusEntry> out;
    for (auto& e : named_small_graphs()) {
        if (e.graph.vertex_count() > max_n) continue;
        if (loopless_only && !e.graph.loopless()) continue;
        out.push_back(std::move(e));
    }
    for (auto& e : seeded_random_graphs(max_n, !loopless_only)) {
        if (loopless_only && !e.graph.loopless()) continue;
        out.push_back(std::move(e));
    }
    return out;
}

PlanarEmbedding embedding_cycle(int n) {
    if (n < 3) throw DomainError("embedding_cycle needs n >= 3");
    PlanarEmbedding emb;
    emb.n = n;
    for (int i = 0; i < n; ++i) emb.edges.emplace_back(i, (i + 1) % n);
    emb.rotation.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) emb.rotation[v] = {(v + n - 1) % n, v};
    return emb;
}

PlanarEmbedding embedding_single_edge() {
    PlanarEmbedding emb;
    emb.n = 2;
    emb.edges.emplace_back(0, 1);
    emb.rotation = {{0}, {0}};
    return emb;
}

PlanarEmbedding embedding_k4() {
    // Vertex 0 in the center of the triangle 1,2,3 (listed counterclockwise).
    PlanarEmbedding emb;
    emb.n = 4;
    emb.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    emb.rotation = {
        {0, 1, 2}, // at 0: towards 1, 2, 3
        {3, 0, 4}, // at 1
        {5, 1, 3}, // at 2
        {4, 2, 5}, // at 3
    };
    return emb;
}

PlanarEmbedding embedding_wheel4() {
    // Hub 0, rim 1..4 counterclockwise; spokes first, then rim edges.
    PlanarEmbedding emb;
    emb.n = 5;
    emb.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}};
    emb.rotation = {
        {0, 1, 2, 3}, // hub
        {4, 0, 7},    // at 1
        {1, 4, 5},    // at 2
        {6, 2, 5},    // at 3
        {7, 3, 6},    // at 4
    };
    return emb;
}

PlanarEmbedding embedding_theta() {
    // Poles 0 and 1 joined by a direct edge and by two length-2 paths
    // through 2 (above) and 3 (below).
    PlanarEmbedding emb;
    emb.n = 4;
    emb.edges = {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}};
    emb.rotation = {
        {0, 1, 3}, // at 0
        {2, 0, 4}, // at 1
        {1, 2},    // at 2
        {3, 4},    // at 3
    };
    return emb;
}

std::vector<std::pair<std::string, PlanarEmbedding>> corpus_embeddings() {
    std::vector<std::pair<std::string, PlanarEmbedding>> out;
    out.emplace_back("C3", embedding_cycle(3));
    out.emplace_back("C4", embedding_cycle(4));
    out.emplace_back("C5", embedding_cycle(5));
    out.emplace_back("C6", embedding_cycle(6));
    out.emplace_back("P2", embedding_single_edge());
    out.emplace_back("K4", embedding_k4());
    out.emplace_back("W4", embedding_wheel4());
    out.emplace_back("theta", embedding_theta());
    return out;
}

} // namespace interlace
