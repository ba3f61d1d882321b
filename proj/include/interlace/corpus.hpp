#pragma once

#include <string>
#include <vector>

#include "interlace/embedding.hpp"
#include "interlace/graph.hpp"

namespace interlace {

// Deterministic graph corpus for property suites: a fixed set of named small
// graphs plus seed-fixed random graphs of every order up to max_n.

struct CorpusEntry {
    std::string name;
    Graph graph;
};

// E1..E3, paths, cycles, cliques, a star, and a few loopy variants.
std::vector<CorpusEntry> named_small_graphs();

std::vector<CorpusEntry> seeded_random_graphs(int max_n, bool allow_loops);

// Named + random, filtered to at most max_n vertices; loopless_only drops
// every graph with a self-loop.
std::vector<CorpusEntry> corpus_graphs(int max_n, bool loopless_only);

// Hand-built rotation systems for the medial pipeline: cycles C3..C6, the
// single edge P2, K4, the wheel W4 and a theta graph.
std::vector<std::pair<std::string, PlanarEmbedding>> corpus_embeddings();

PlanarEmbedding embedding_cycle(int n);
PlanarEmbedding embedding_single_edge();
PlanarEmbedding embedding_k4();
PlanarEmbedding embedding_wheel4();
PlanarEmbedding embedding_theta();

} // namespace interlace
