#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hypermatch/constructions.hpp"
#include "hypermatch/hypergraph.hpp"
#include "oracles.hpp"

using namespace hypermatch;

TEST_CASE("vertex set operations") {
    VertexSet s{1, 5, 63};
    CHECK(s.size() == 3);
    CHECK(s.contains(63));
    CHECK_FALSE(s.contains(2));
    CHECK(s.front() == 1);
    CHECK(s.to_vector() == std::vector<Vertex>{1, 5, 63});
    CHECK((s - VertexSet{5}) == VertexSet{1, 63});
    CHECK((s & VertexSet{5, 6}) == VertexSet{5});
    CHECK(VertexSet{1}.subset_of(s));
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet::range(0).empty());
    CHECK_THROWS_AS(s.insert(64), std::out_of_range);
}

TEST_CASE("edges are sorted triples") {
    const Edge e(7, 2, 4);
    CHECK(e[0] == 2);
    CHECK(e[1] == 4);
    CHECK(e[2] == 7);
    CHECK(e.contains(4));
    CHECK(e.mask() == VertexSet{2, 4, 7});
    CHECK_THROWS_AS(Edge(1, 1, 2), std::invalid_argument);
}

TEST_CASE("build validates and deduplicates") {
    const auto h = Hypergraph3::build(5, {{0, 1, 2}, {2, 1, 0}, {1, 3, 4}});
    CHECK(h.num_edges() == 2);
    CHECK(h.has_edge(2, 0, 1));
    CHECK_FALSE(h.has_edge(0, 1, 3));
    CHECK(h.pair_link(1, 3) == VertexSet{4});
    CHECK_THROWS_AS(Hypergraph3::build(3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph3::build(3, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph3::build(65, {}), std::invalid_argument);
}

TEST_CASE("degrees of the space barrier at n = 6") {
    const auto inst = extremal_star(6);
    const Vertex w = inst.partition.w.front();
    CHECK(inst.graph.degree(w) == 10);
    CHECK(inst.graph.degree(0) == 4);
    CHECK(min_degree(inst.graph, 1) == 4);
}

TEST_CASE("codegrees of H_{9,3}") {
    const auto inst = h_n_d(9, 3);
    const auto& h = inst.graph;
    CHECK(h.num_edges() == 63);
    CHECK(h.codegree(0, 1) == 3);  // two V vertices
    CHECK(h.codegree(6, 7) == 6);  // two W vertices
    CHECK(h.codegree(0, 6) == 7);
    CHECK(min_degree(h, 2) == 3);
    CHECK(min_degree(h, 1) == 18);
    CHECK_THROWS_AS(h.codegree(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(h.degree(9), std::out_of_range);
}

TEST_CASE("minimum degree error paths") {
    CHECK_THROWS_AS(min_degree(Hypergraph3::build(0, {}), 1), std::domain_error);
    CHECK_THROWS_AS(min_degree(Hypergraph3::build(1, {}), 2), std::domain_error);
    CHECK_THROWS_AS(min_degree(Hypergraph3::build(3, {}), 3), std::invalid_argument);
    CHECK(min_degree(Hypergraph3::build(3, {}), 1) == 0);
}

TEST_CASE("threshold values") {
    CHECK(threshold(6, 2) == 4);
    CHECK(threshold(9, 3) == 13);
    CHECK(threshold(9, 1) == 0);
    CHECK_THROWS(threshold(6, 0));
    CHECK_THROWS(threshold(6, 3));
    for (std::int64_t n = 3; n <= 40; ++n)
        for (std::int64_t d = 1; 3 * d <= n; ++d) CHECK(threshold(n, d) == oracle::threshold_by_counting(n, d));
}

TEST_CASE("degree profile agrees with edge scans and the handshake identities") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + rng() % 10;
        const auto h = oracle::random_graph(rng, n, 0.1 * double(1 + rng() % 9));
        const auto prof = degree_profile(h);
        std::size_t sum = 0, pair_sum = 0;
        for (Vertex v = 0; v < n; ++v) {
            CHECK(prof.degrees[v] == oracle::degree(h, v));
            sum += prof.degrees[v];
            std::size_t row = 0;
            for (Vertex u = 0; u < n; ++u) {
                if (u == v) continue;
                CHECK(prof.codegrees[v][u] == oracle::codegree(h, u, v));
                row += prof.codegrees[v][u];
                if (u > v) pair_sum += prof.codegrees[v][u];
            }
            CHECK(row == 2 * prof.degrees[v]);
        }
        CHECK(sum == 3 * h.num_edges());
        CHECK(pair_sum == 3 * h.num_edges());
        CHECK(prof.delta1 == *std::min_element(prof.degrees.begin(), prof.degrees.end()));
    }
}

TEST_CASE("remove_vertices keeps exactly the edges avoiding the removed set") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + rng() % 10;
        const auto h = oracle::random_graph(rng, n, 0.5);
        const VertexSet removed(rng() & VertexSet::range(n).bits());
        const auto r = remove_vertices(h, removed);
        CHECK(r.graph.n() == n - removed.size());
        CHECK(std::is_sorted(r.original.begin(), r.original.end()));
        std::size_t expected = 0;
        for (const Edge& e : h.edges())
            if (!e.mask().intersects(removed)) ++expected;
        CHECK(r.graph.num_edges() == expected);
        for (const Edge& e : r.graph.edges())
            CHECK(h.has_edge(r.original[e[0]], r.original[e[1]], r.original[e[2]]));
    }
}

TEST_CASE("matchings reject overlaps and validate against a host") {
    const auto h = Hypergraph3::build(6, {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}});
    Matching m;
    m.add(Edge(0, 1, 2));
    CHECK_THROWS_AS(m.add(Edge(0, 3, 4)), std::invalid_argument);
    m.add(Edge(3, 4, 5));
    CHECK(m.valid_in(h));
    CHECK(m.uncovered(h).empty());
    m.remove(Edge(0, 1, 2));
    CHECK(m.covered() == VertexSet{3, 4, 5});
    CHECK_THROWS_AS(m.remove(Edge(0, 1, 2)), std::invalid_argument);
    CHECK_FALSE(Matching({Edge(0, 1, 5)}).valid_in(h));
}

TEST_CASE("partition helpers") {
    const auto p = Partition::suffix(9, 3);
    CHECK(p.w == VertexSet{6, 7, 8});
    CHECK(p.d == 3);
    CHECK(p.v().size() == 6);
    CHECK(edge_type(Edge(0, 1, 6), p) == EdgeType::VVW);
    CHECK(edge_type(Edge(0, 7, 6), p) == EdgeType::VWW);
    CHECK(edge_type(Edge(0, 1, 2), p) == EdgeType::VVV);
    CHECK(edge_type(Edge(6, 7, 8), p) == EdgeType::WWW);
    Partition bad{4, VertexSet{5}, 1};
    CHECK_THROWS(bad.validate());
}
