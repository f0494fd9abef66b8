#include <doctest.h>

#include <array>
#include <stdexcept>
#include <vector>

#include "hypermatch/link.hpp"
#include "oracles.hpp"

using namespace hypermatch;

namespace {

std::vector<std::array<int, 3>> permutations() {
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> p{0, 1, 2};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_CASE("perfect matching test agrees with the permanent on all 512 patterns") {
    for (unsigned m = 0; m < 512; ++m) {
        const BipartitePattern p(static_cast<std::uint16_t>(m));
        CHECK(has_perfect_matching(p) == (oracle::permanent(p) > 0));
    }
}

TEST_CASE("classification of all patterns") {
    const auto r = verify_fact1();
    CHECK(r.patterns == 512);
    CHECK(r.violations == 0);
    CHECK(r.base_edge_consistent);
    CHECK(r.counts.at(PatternKind::B033)[6] == 6);
    CHECK(r.counts.at(PatternKind::B023)[5] == 36);
    CHECK(r.counts.at(PatternKind::B113)[5] == 9);
    for (int e = 7; e <= 9; ++e) {
        CHECK(r.counts.at(PatternKind::B033)[e] + r.counts.at(PatternKind::B023)[e] +
                  r.counts.at(PatternKind::B113)[e] + r.counts.at(PatternKind::Deficient)[e] ==
              0);
    }
    REQUIRE(r.classes.size() == 3);
    for (const auto& c : r.classes) {
        if (c.kind == PatternKind::B033) {
            CHECK(c.edges == 6);
            CHECK(c.labeled == 6);
            CHECK(c.degrees == std::array<int, 3>{0, 3, 3});
        } else if (c.kind == PatternKind::B023) {
            CHECK(c.edges == 5);
            CHECK(c.labeled == 36);
            CHECK(c.degrees == std::array<int, 3>{0, 2, 3});
        } else {
            CHECK(c.kind == PatternKind::B113);
            CHECK(c.labeled == 9);
            CHECK(c.degrees == std::array<int, 3>{1, 1, 3});
        }
    }
    std::size_t pm_free = 0;
    for (unsigned m = 0; m < 512; ++m) {
        const BipartitePattern p(static_cast<std::uint16_t>(m));
        if (oracle::permanent(p) == 0 && p.edge_count() >= 5) ++pm_free;
    }
    CHECK(pm_free == 6 + 36 + 9);
}

TEST_CASE("classification is invariant under relabeling") {
    const auto perms = permutations();
    for (unsigned m = 0; m < 512; ++m) {
        const BipartitePattern p(static_cast<std::uint16_t>(m));
        const auto c = classify(p);
        for (const auto& px : perms)
            for (const auto& py : perms) {
                const auto q = p.relabel(px, py);
                const auto d = classify(q);
                CHECK(d.kind == c.kind);
                CHECK(d.isolated_in_x == c.isolated_in_x);
                if (c.base) CHECK(*d.base == std::pair{px[c.base->first], py[c.base->second]});
                CHECK(canonical_form(q) == canonical_form(p));
            }
        const auto t = classify(p.transpose());
        CHECK(t.kind == c.kind);
        if (c.kind == PatternKind::B023 || c.kind == PatternKind::B033) CHECK(t.isolated_in_x != c.isolated_in_x);
        CHECK(isomorphism_form(p.transpose()) == isomorphism_form(p));
    }
}

TEST_CASE("base edge of a B113 pattern") {
    const auto p = BipartitePattern::from_pairs({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
    CHECK(classify(p).kind == PatternKind::B113);
    CHECK(base_edge(p) == std::pair{0, 0});
    const auto q = BipartitePattern::from_pairs({{1, 2}, {1, 0}, {1, 1}, {0, 2}, {2, 2}});
    CHECK(base_edge(q) == std::pair{1, 2});
    CHECK_THROWS_AS(base_edge(BipartitePattern(0x1FF)), std::invalid_argument);
    CHECK_THROWS_AS(BipartitePattern::from_pairs({{3, 0}}), std::out_of_range);
}

TEST_CASE("link graphs") {
    const auto h = Hypergraph3::build(7, {{0, 1, 4}, {0, 2, 5}, {0, 3, 6}, {0, 1, 2}, {1, 4, 5}});
    const std::vector<Vertex> a{1, 2, 3}, b{4, 5, 6};
    const auto g = link_bipartite(h, 0, a, b);
    CHECK(g.size() == 3);
    REQUIRE(g.pattern);
    CHECK(has_perfect_matching(*g.pattern));
    CHECK(g.contains(5, 2));
    CHECK(g.edge_with({1, 4}) == Edge(0, 1, 4));
    CHECK(link_within(h, 0, a).size() == 1);
    CHECK(link_pattern(h, 0, Edge(1, 2, 3), Edge(4, 5, 6)) == *g.pattern);
    const std::vector<std::vector<Vertex>> chain{{1}, {2, 4}, {5}};
    CHECK(link_chain(h, 0, chain).size() == 3);
    const std::vector<Vertex> with_apex{0, 1, 2};
    CHECK_THROWS_AS(link_bipartite(h, 0, with_apex, b), std::invalid_argument);
    const std::vector<Vertex> overlap{3, 4};
    CHECK_THROWS_AS(link_bipartite(h, 0, a, overlap), std::invalid_argument);
    const std::vector<std::vector<Vertex>> one{{1}};
    CHECK_THROWS_AS(link_chain(h, 0, one), std::invalid_argument);
    CHECK_THROWS_AS(link_within(h, 9, a), std::out_of_range);
}
