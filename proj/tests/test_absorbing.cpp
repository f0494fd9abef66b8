#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hypermatch/absorbing.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/exact_solver.hpp"
#include "oracles.hpp"

using namespace hypermatch;

namespace {

Hypergraph3 complete(std::size_t n) { return random_hypergraph(n, 1.0, 0); }

}  // namespace

TEST_CASE("absorbs agrees with both oracles") {
    std::mt19937_64 rng(41);
    int positives = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 6 + rng() % 7;
        const auto h = oracle::random_graph(rng, n, 0.3 + 0.1 * double(trial % 6));
        if (h.num_edges() == 0) continue;
        const Edge e = h.edges()[rng() % h.num_edges()];
        std::vector<Vertex> rest = (h.vertices() - e.mask()).to_vector();
        std::shuffle(rest.begin(), rest.end(), rng);
        const VertexSet t{rest[0], rest[1], rest[2]};
        const bool a = absorbs(h, e, t);
        CHECK(a == oracle::six_split(h, {e[0], e[1], e[2], rest[0], rest[1], rest[2]}));
        CHECK(a == (max_matching_in_subset(h, e.mask() | t).matching.size() == 2));
        if (a) {
            ++positives;
            const auto pair = absorbing_pair(h, e, t);
            REQUIRE(pair);
            CHECK(h.has_edge((*pair)[0]));
            CHECK(h.has_edge((*pair)[1]));
            CHECK(((*pair)[0].mask() | (*pair)[1].mask()) == (e.mask() | t));
        }
    }
    CHECK(positives > 100);
    const auto h = complete(7);
    CHECK_THROWS_AS(absorbs(h, Edge(0, 1, 2), VertexSet{3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(absorbs(h, Edge(0, 1, 2), VertexSet{2, 3, 4}), std::invalid_argument);
}

TEST_CASE("complete hypergraph is absorbed by any edge") {
    AbsorbConfig cfg;
    cfg.gamma = 0.5;
    const auto a = find_absorbing(complete(12), cfg);
    CHECK(a.success);
    CHECK(a.matching.size() >= 1);
    CHECK(a.exhaustive);
    // delta_1 <= C(n-1,2) never reaches (1/2 + 2 gamma) C(n,2) at gamma = 1/2.
    CHECK_FALSE(a.hypothesis_holds);
}

TEST_CASE("dense random instance with redundancy two") {
    AbsorbConfig cfg;
    cfg.redundancy = 2;
    const auto h = random_hypergraph(18, 0.8, 5);
    const auto a = find_absorbing(h, cfg);
    CHECK(a.success);
    CHECK(a.exhaustive);
    CHECK(a.matching.valid_in(h));
    CHECK(a.matching.size() <= 3);
    CHECK(a.triples.size() == static_cast<std::size_t>(binom3(18 - 3 * std::int64_t(a.matching.size()))));
    for (std::size_t i = 0; i < a.triples.size(); ++i) {
        CHECK(a.absorbers[i].size() >= 2);
        for (auto j : a.absorbers[i]) CHECK(absorbs(h, a.matching.edges()[j], a.triples[i]));
    }
}

TEST_CASE("space barrier cannot absorb") {
    AbsorbConfig cfg;
    cfg.redundancy = 2;
    const auto a = find_absorbing(extremal_star(12).graph, cfg);
    CHECK_FALSE(a.success);
    CHECK_FALSE(a.hypothesis_holds);
}

TEST_CASE("contract mode respects the size cap") {
    for (double gamma : {0.25, 0.5, 0.75, 1.0}) {
        AbsorbConfig cfg;
        cfg.gamma = gamma;
        cfg.contract = true;
        const auto a = find_absorbing(random_hypergraph(15, 0.9, 2), cfg);
        CHECK(double(a.matching.size()) <= gamma * gamma * gamma * 15.0 / 3.0);
        CHECK(a.capacity % 3 == 0);
    }
}

TEST_CASE("leftover absorption covers exactly") {
    const auto h = random_hypergraph(15, 0.85, 3);
    const auto a = find_absorbing(h);
    REQUIRE(a.success);
    const auto residual = (h.vertices() - a.matching.covered()).to_vector();
    const VertexSet left{residual[0], residual[1], residual[2]};
    const auto r = absorb_leftover(h, a, left);
    REQUIRE(r.success);
    CHECK(r.matching.valid_in(h));
    CHECK(r.matching.covered() == (a.matching.covered() | left));
    CHECK(absorb_leftover(h, a, VertexSet{}).success);
    CHECK_THROWS_AS(absorb_leftover(h, a, VertexSet{residual[0], residual[1]}), std::invalid_argument);
    CHECK_THROWS_AS(absorb_leftover(h, a, a.matching.covered()), std::invalid_argument);
    VertexSet big;
    for (std::size_t i = 0; i < 3 * (a.matching.size() + 1) && i < residual.size(); ++i) big.insert(residual[i]);
    if (big.size() % 3 == 0 && big.size() > a.capacity) {
        const auto over = absorb_leftover(h, a, big);
        CHECK_FALSE(over.success);
        CHECK_FALSE(over.reason.empty());
    }
}

TEST_CASE("pipeline produces perfect matchings on dense instances") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto h = random_hypergraph(12, 0.8, seed);
        const auto r = perfect_via_absorbing(h);
        CHECK(r.success);
        CHECK(r.report.matching.valid_in(h));
        CHECK(r.report.matching.covered() == h.vertices());
    }
}

TEST_CASE("pipeline names the failing phase") {
    CHECK(perfect_via_absorbing(complete(7)).failed_phase == "order");
    const auto r = perfect_via_absorbing(extremal_star(12).graph);
    CHECK_FALSE(r.success);
    CHECK_FALSE(r.failed_phase.empty());
    CHECK(r.report.matching.valid_in(extremal_star(12).graph));
}
