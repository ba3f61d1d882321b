#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interlace/errors.hpp"
#include "interlace/rational.hpp"

namespace interlace {

// Simple undirected graph with self-loops allowed, dense vertex ids
// 0..n-1, and a canonically sorted edge set. No parallel edges: the F2
// adjacency matrix could not represent them. Transformations append new
// vertices after the existing ids and may record provenance labels.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    void add_edge(int u, int v); // throws on out-of-range or duplicate
    bool has_edge(int u, int v) const;
    bool has_loop(int v) const { return has_edge(v, v); }
    bool loopless() const;
    int degree(int v) const; // a loop contributes 2

    std::vector<int> neighbors(int v) const; // excludes v itself, sorted

    // Row v has bit w set iff {v,w} is an edge; bit v iff v has a loop.
    // Requires n <= 64.
    std::vector<std::uint64_t> adjacency_rows() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(int v, std::string label);
    std::string label_or_id(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // (u,v) with u <= v, sorted
    std::vector<std::string> labels_;        // empty when untracked
};

// Edge-list format: "n m\n" then m lines "u v\n"; loops as "u u";
// edges must be distinct as unordered pairs.
Graph parse_edgelist(const std::string& text);
std::string to_edgelist(const Graph& g);

// Vertices of A keep their relative order (ascending original id).
Graph induced_subgraph(const Graph& g, const std::vector<int>& a);
Graph induced_subgraph_mask(const Graph& g, std::uint64_t mask);

Graph disjoint_union(const Graph& a, const Graph& b);

// Seed-deterministic G(n, p) with independent loop probability. The mt19937_64
// draw order is: for each u ascending, the loop at u, then pairs {u,v} for
// v > u ascending.
Graph random_graph(int n, const BigRational& edge_probability,
                   const BigRational& loop_probability, std::uint64_t seed);

} // namespace interlace
