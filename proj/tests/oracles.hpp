#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the Hypergraph3 container.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/link.hpp"

namespace oracle {

using hypermatch::Edge;
using hypermatch::Hypergraph3;
using hypermatch::Vertex;
using hypermatch::VertexSet;

inline std::uint64_t bits(const Edge& e) { return (1ULL << e[0]) | (1ULL << e[1]) | (1ULL << e[2]); }

namespace detail {
inline void enumerate(const std::vector<std::uint64_t>& edges, std::size_t from, std::uint64_t used,
                      std::size_t size, std::size_t& best) {
    best = std::max(best, size);
    for (std::size_t i = from; i < edges.size(); ++i)
        if ((edges[i] & used) == 0) enumerate(edges, i + 1, used | edges[i], size + 1, best);
}
}  // namespace detail

/// Largest set of pairwise disjoint edges inside `allowed`, by listing every matching.
inline std::size_t max_matching(const Hypergraph3& h, std::uint64_t allowed = ~0ULL) {
    std::vector<std::uint64_t> edges;
    for (const Edge& e : h.edges())
        if ((bits(e) & ~allowed) == 0) edges.push_back(bits(e));
    std::size_t best = 0;
    detail::enumerate(edges, 0, 0, 0, best);
    return best;
}

inline bool has_triple(const Hypergraph3& h, Vertex a, Vertex b, Vertex c) {
    const auto want = (1ULL << a) | (1ULL << b) | (1ULL << c);
    return std::any_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) { return bits(e) == want; });
}

/// Checks the 10 ways to split six vertices into two triples.
inline bool six_split(const Hypergraph3& h, const std::array<Vertex, 6>& six) {
    for (int i = 1; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            std::array<Vertex, 3> rest{};
            int r = 0;
            for (int k = 1; k < 6; ++k)
                if (k != i && k != j) rest[r++] = six[k];
            if (has_triple(h, six[0], six[i], six[j]) && has_triple(h, rest[0], rest[1], rest[2])) return true;
        }
    return false;
}

inline std::size_t degree(const Hypergraph3& h, Vertex v) {
    return static_cast<std::size_t>(
        std::count_if(h.edges().begin(), h.edges().end(), [&](const Edge& e) { return (bits(e) >> v) & 1U; }));
}

inline std::size_t codegree(const Hypergraph3& h, Vertex u, Vertex v) {
    const auto pair = (1ULL << u) | (1ULL << v);
    return static_cast<std::size_t>(
        std::count_if(h.edges().begin(), h.edges().end(), [&](const Edge& e) { return (bits(e) & pair) == pair; }));
}

/// Permanent of the 0/1 biadjacency matrix.
inline int permanent(hypermatch::BipartitePattern p) {
    std::array<int, 3> perm{0, 1, 2};
    int total = 0;
    do {
        total += int(p.has(0, perm[0]) && p.has(1, perm[1]) && p.has(2, perm[2]));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Pairs {a, b} inside {1..n-1} meeting the set {n-d+1, ..., n-1}: the
/// degree of a vertex outside a (d-1)-set W when every triple meets W.
inline std::int64_t threshold_by_counting(std::int64_t n, std::int64_t d) {
    std::int64_t count = 0;
    for (std::int64_t a = 1; a < n; ++a)
        for (std::int64_t b = a + 1; b < n; ++b)
            if (a >= n - d + 1 || b >= n - d + 1) ++count;
    return count;
}

inline Hypergraph3 random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution keep(p);
    std::vector<std::array<Vertex, 3>> t;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (keep(rng)) t.push_back({a, b, c});
    return Hypergraph3::build(n, t);
}

/// Every matching of exactly k edges.
inline std::vector<std::vector<Edge>> matchings_of_size(const Hypergraph3& h, std::size_t k) {
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> cur;
    auto rec = [&](auto&& self, std::size_t from, std::uint64_t used) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < h.edges().size(); ++i) {
            const Edge& e = h.edges()[i];
            if (bits(e) & used) continue;
            cur.push_back(e);
            self(self, i + 1, used | bits(e));
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace oracle
