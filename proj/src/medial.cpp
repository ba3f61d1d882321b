#include "interlace/medial.hpp"

#include <algorithm>
#include <random>

#include "interlace/interlace_eval.hpp"
#include "interlace/tutte.hpp"

namespace interlace {

OrientedMedial medial_graph(const PlanarEmbedding& emb) {
    trace_faces(emb); // validates the embedding, including Euler's formula
    OrientedMedial m;
    m.vertex_count = emb.edge_count();
    // Walking the rotation at v counterclockwise traverses the boundary of
    // the black face around v; directing each corner dart along that walk
    // keeps the black face on the left.
    for (int v = 0; v < emb.n; ++v) {
        const auto& rot = emb.rotation[v];
        for (std::size_t i = 0; i < rot.size(); ++i)
            m.darts.push_back({rot[i], rot[(i + 1) % rot.size()]});
    }
    return m;
}

void DoubleOccurrenceWord::validate() const {
    std::vector<int> count;
    for (int letter : letters) {
        if (letter < 0) throw DomainError("negative letter in double occurrence word");
        if (letter >= static_cast<int>(count.size())) count.resize(letter + 1, 0);
        ++count[letter];
    }
    for (std::size_t i = 0; i < count.size(); ++i)
        if (count[i] != 0 && count[i] != 2)
            throw DomainError("letter " + std::to_string(i) + " occurs " +
                              std::to_string(count[i]) + " times, expected twice");
}

namespace {

DoubleOccurrenceWord euler_circuit_impl(const OrientedMedial& m,
                                        std::vector<std::vector<int>> out_darts) {
    DoubleOccurrenceWord word;
    if (m.darts.empty()) return word;

    std::vector<std::size_t> next_unused(static_cast<std::size_t>(m.vertex_count), 0);
    // Hierholzer: walk until stuck (back at a vertex with no unused out-dart),
    // then splice detours found along the stack.
    std::vector<int> stack_vertices{m.darts[0].from};
    std::vector<int> circuit_darts;
    std::vector<int> dart_stack;
    while (!stack_vertices.empty()) {
        int v = stack_vertices.back();
        if (next_unused[v] < out_darts[v].size()) {
            int d = out_darts[v][next_unused[v]++];
            dart_stack.push_back(d);
            stack_vertices.push_back(m.darts[d].to);
        } else {
            stack_vertices.pop_back();
            if (!dart_stack.empty() && !stack_vertices.empty()) {
                circuit_darts.push_back(dart_stack.back());
                dart_stack.pop_back();
            }
        }
    }
    std::reverse(circuit_darts.begin(), circuit_darts.end());
    if (circuit_darts.size() != m.darts.size())
        throw DomainError("medial graph is not connected: no single Euler circuit");
    for (int d : circuit_darts) word.letters.push_back(m.darts[d].to);
    word.validate();
    return word;
}

std::vector<std::vector<int>> collect_out_darts(const OrientedMedial& m) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(m.vertex_count));
    for (std::size_t d = 0; d < m.darts.size(); ++d) out[m.darts[d].from].push_back(static_cast<int>(d));
    return out;
}

} // namespace

DoubleOccurrenceWord euler_circuit(const OrientedMedial& m) {
    return euler_circuit_impl(m, collect_out_darts(m));
}

DoubleOccurrenceWord euler_circuit_random(const OrientedMedial& m, std::uint64_t seed) {
    auto out = collect_out_darts(m);
    std::mt19937_64 rng(seed);
    for (auto& lst : out) std::shuffle(lst.begin(), lst.end(), rng);
    return euler_circuit_impl(m, out);
}

Graph circle_graph(const DoubleOccurrenceWord& w) {
    w.validate();
    int max_letter = -1;
    for (int letter : w.letters) max_letter = std::max(max_letter, letter);
    std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(max_letter) + 1, {-1, -1});
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        auto& p = pos[w.letters[i]];
        (p.first < 0 ? p.first : p.second) = static_cast<int>(i);
    }
    for (const auto& p : pos)
        if (p.first < 0 || p.second < 0)
            throw DomainError("double occurrence word must use every letter 0..max twice");
    int n = max_letter + 1;
    Graph h(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool b1_inside = pos[a].first < pos[b].first && pos[b].first < pos[a].second;
            bool b2_inside = pos[a].first < pos[b].second && pos[b].second < pos[a].second;
            if (b1_inside != b2_inside) h.add_edge(a, b);
        }
    return h;
}

std::string MedialIdentityReport::summary() const {
    std::string s;
    s += "q(H;2,y) = " + q_side.str() + "\n";
    s += "t(G;y,y) = " + t_side.str() + "\n";
    s += std::string("verdict: ") + (equal ? "EQUAL" : "DIFFERENT") + "\n";
    return s;
}

MedialIdentityReport medial_identity_check(const PlanarEmbedding& emb) {
    OrientedMedial m = medial_graph(emb);
    DoubleOccurrenceWord word = euler_circuit(m);
    Graph h = circle_graph(word);
    MedialIdentityReport report;
    report.q_side = specialize(h, SpecialPoly::vertex_nullity);
    report.t_side = tutte_poly(emb.underlying()).diagonal("y");
    report.equal = report.q_side == report.t_side;
    return report;
}

} // namespace interlace
