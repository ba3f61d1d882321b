#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interlace/embedding.hpp"
#include "interlace/polynomial.hpp"

namespace interlace {

// Oriented medial graph: one vertex per edge of the embedded graph, one
// directed dart per face corner, oriented so the vertex-face (black) lies on
// the left. Every vertex has in-degree 2 and out-degree 2. This is a
// 4-regular directed multigraph; parallel darts and directed loops occur
// (the medial of a single edge is one vertex with two loops).
struct OrientedMedial {
    struct Dart {
        int from, to;
    };
    int vertex_count = 0;
    std::vector<Dart> darts; // deterministic order: by G-vertex, then rotation position
};

OrientedMedial medial_graph(const PlanarEmbedding& emb);

// Cyclic word in which every medial vertex id occurs exactly twice; the
// projection of an Euler circuit to the visited vertices.
struct DoubleOccurrenceWord {
    std::vector<int> letters;

    void validate() const; // each letter exactly twice
};

// Hierholzer's algorithm, determinized by always leaving on the smallest
// unused dart id.
DoubleOccurrenceWord euler_circuit(const OrientedMedial& m);

// Same construction with seeded random tie-breaking among unused out-darts.
DoubleOccurrenceWord euler_circuit_random(const OrientedMedial& m, std::uint64_t seed);

// Interlacement graph: letters are vertices, adjacent iff their occurrence
// pairs interleave cyclically (u..v..u..v).
Graph circle_graph(const DoubleOccurrenceWord& w);

// Full pipeline check: the circle graph H of an Euler circuit of the
// oriented medial of G satisfies q(H;2,y) = t(G;y,y).
struct MedialIdentityReport {
    UniPoly q_side; // q(H;2,y)
    UniPoly t_side; // t(G;y,y)
    bool equal = false;
    std::string summary() const;
};

MedialIdentityReport medial_identity_check(const PlanarEmbedding& emb);

} // namespace interlace
