#pragma once

#include <string>
#include <vector>

#include "interlace/graph.hpp"

namespace interlace {

// Rotation-system embedding of a connected loopless graph: for every vertex,
// the counterclockwise cyclic order of its incident edge ids. Edge ids are
// positional (the order edges were listed), independent of the canonical
// sort inside Graph. Planarity is certified by Euler's formula on the traced
// faces rather than by a planarity test.
struct PlanarEmbedding {
    int n = 0;
    std::vector<std::pair<int, int>> edges;      // id -> endpoints
    std::vector<std::vector<int>> rotation;      // per vertex: incident edge ids

    Graph underlying() const;
    int edge_count() const { return static_cast<int>(edges.size()); }

    // Throws unless every incident edge appears exactly once per endpoint,
    // the graph is loopless and connected.
    void validate() const;
};

// Darts are directed edge sides: dart 2e leaves edges[e].first, dart 2e+1
// leaves edges[e].second.
int dart_tail(const PlanarEmbedding& emb, int dart);
int dart_head(const PlanarEmbedding& emb, int dart);

// Orbits of the next-dart permutation (reverse, then rotation successor at
// the new tail). Validates Euler's formula n - m + f = 2 and throws a
// DomainError describing a non-planar embedding otherwise.
std::vector<std::vector<int>> trace_faces(const PlanarEmbedding& emb);

// File format: "n m", then m lines "u v" (edge ids 0..m-1 in order), then n
// lines "rot v: e1 e2 ...".
PlanarEmbedding parse_rotation_system(const std::string& text);
std::string to_rotation_system(const PlanarEmbedding& emb);

} // namespace interlace
