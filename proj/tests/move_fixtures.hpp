#pragma once

// Hand-built configurations whose only improving exchanges remove exactly k
// matching edges.

#include <string>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace fixtures {

using hypermatch::Edge;
using hypermatch::Hypergraph3;
using hypermatch::Matching;
using hypermatch::Vertex;

struct MoveFixture {
    std::string name;
    Hypergraph3 graph;
    Matching matching;
    std::size_t k = 0;
};

/// M = {E, F}; three uncovered vertices share the link {x_i y_i}, a perfect
/// matching between E and F. Only the 2 -> 3 exchange exists.
inline MoveFixture two_for_three() {
    std::vector<Edge> edges{Edge(0, 1, 2), Edge(3, 4, 5)};
    for (Vertex v = 6; v < 9; ++v)
        for (Vertex i = 0; i < 3; ++i) edges.emplace_back(v, i, 3 + i);
    return {"2->3 shared perfect link", Hypergraph3::from_edges(9, edges), Matching({Edge(0, 1, 2), Edge(3, 4, 5)}),
            2};
}

/// M = {E}; two uncovered vertices v1, v2 each see two vertices of E joined
/// to every other uncovered vertex. Replacing E by v1 x1 u and v2 x2 u' works.
inline MoveFixture one_for_two() {
    std::vector<Edge> edges{Edge(0, 1, 2)};
    for (Vertex v : {3u, 4u})
        for (Vertex x : {0u, 1u})
            for (Vertex u = 3; u < 9; ++u)
                if (u != v) edges.emplace_back(v, x, u);
    return {"1->2 two good apexes", Hypergraph3::from_edges(9, edges), Matching({Edge(0, 1, 2)}), 1};
}

/// M = E1..E5 (vertices 0..14), six uncovered vertices 15..20 with identical
/// links: L(E1E2), L(E3E2), L(E3E4), L(E5E4) are each a copy of B033 whose
/// isolated vertex lies in the first class. The link then holds a 6-matching
/// across E1..E5 and no smaller exchange exists.
inline MoveFixture five_for_six() {
    auto block = [](int i) { return std::vector<Vertex>{Vertex(3 * i), Vertex(3 * i + 1), Vertex(3 * i + 2)}; };
    std::vector<Edge> edges;
    Matching m;
    for (int i = 0; i < 5; ++i) {
        const auto b = block(i);
        edges.emplace_back(b[0], b[1], b[2]);
        m.add(Edge(b[0], b[1], b[2]));
    }
    // (class with the isolated vertex, the other class)
    const std::vector<std::pair<int, int>> links{{0, 1}, {2, 1}, {2, 3}, {4, 3}};
    for (Vertex v = 15; v < 21; ++v)
        for (auto [iso, full] : links) {
            const auto a = block(iso);
            for (Vertex x : {a[0], a[1]})
                for (Vertex y : block(full)) edges.emplace_back(v, x, y);
        }
    return {"5->6 suitable path", Hypergraph3::from_edges(21, edges), m, 5};
}

inline std::vector<MoveFixture> all_moves() { return {two_for_three(), one_for_two(), five_for_six()}; }

}  // namespace fixtures
