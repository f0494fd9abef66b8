#include "hypermatch/link.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hypermatch {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

void require_disjoint(Vertex v, std::span<const Vertex> a, VertexSet& seen) {
    for (Vertex x : a) {
        if (x == v) throw std::invalid_argument("link apex lies inside a vertex class");
        if (seen.contains(x)) throw std::invalid_argument("link vertex classes overlap");
        seen.insert(x);
    }
}

std::array<int, 3> sorted_degrees(const BipartitePattern& p, bool x_side) {
    std::array<int, 3> d{};
    for (int i = 0; i < 3; ++i) d[i] = x_side ? p.x_degree(i) : p.y_degree(i);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

BipartitePattern BipartitePattern::from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
    BipartitePattern p;
    for (auto [i, j] : pairs) {
        if (i < 0 || i > 2 || j < 0 || j > 2) throw std::out_of_range("pattern index outside 0..2");
        p.set(i, j);
    }
    return p;
}

int BipartitePattern::edge_count() const { return std::popcount(static_cast<unsigned>(mask_)); }

int BipartitePattern::x_degree(int i) const {
    return std::popcount(static_cast<unsigned>((mask_ >> (3 * i)) & 0x7U));
}

int BipartitePattern::y_degree(int j) const { return int(has(0, j)) + int(has(1, j)) + int(has(2, j)); }

BipartitePattern BipartitePattern::transpose() const {
    BipartitePattern t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (has(i, j)) t.set(j, i);
    return t;
}

BipartitePattern BipartitePattern::relabel(const std::array<int, 3>& px, const std::array<int, 3>& py) const {
    BipartitePattern r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (has(i, j)) r.set(px[i], py[j]);
    return r;
}

bool has_perfect_matching(BipartitePattern p) {
    return std::any_of(kPermutations.begin(), kPermutations.end(), [&](const auto& s) {
        return p.has(0, s[0]) && p.has(1, s[1]) && p.has(2, s[2]);
    });
}

BipartitePattern canonical_form(BipartitePattern p) {
    BipartitePattern best = p;
    for (const auto& px : kPermutations)
        for (const auto& py : kPermutations) best = std::min(best, p.relabel(px, py));
    return best;
}

BipartitePattern isomorphism_form(BipartitePattern p) {
    return std::min(canonical_form(p), canonical_form(p.transpose()));
}

std::string_view to_string(PatternKind k) {
    switch (k) {
        case PatternKind::HasPM: return "has_pm";
        case PatternKind::B033: return "B033";
        case PatternKind::B023: return "B023";
        case PatternKind::B113: return "B113";
        case PatternKind::Deficient: return "deficient";
    }
    return "?";
}

PatternClass classify(BipartitePattern p) {
    PatternClass c;
    if (has_perfect_matching(p)) {
        c.kind = PatternKind::HasPM;
        return c;
    }
    const int e = p.edge_count();
    if (e <= 4) return c;

    const auto xs = sorted_degrees(p, true);
    const auto ys = sorted_degrees(p, false);
    // Without a perfect matching some side has a Hall violator; with five or
    // more edges that forces an isolated vertex or the (1,1,3) shape.
    if (xs[0] == 0 || ys[0] == 0) {
        c.isolated_in_x = xs[0] == 0;
        const auto& side = c.isolated_in_x ? xs : ys;
        if (side == std::array<int, 3>{0, 3, 3}) c.kind = PatternKind::B033;
        else if (side == std::array<int, 3>{0, 2, 3}) c.kind = PatternKind::B023;
        else throw std::logic_error("pattern without perfect matching outside the known classes");
        return c;
    }
    if (xs == std::array<int, 3>{1, 1, 3} && ys == std::array<int, 3>{1, 1, 3}) {
        c.kind = PatternKind::B113;
        int bx = 0, by = 0;
        for (int i = 0; i < 3; ++i) {
            if (p.x_degree(i) == 3) bx = i;
            if (p.y_degree(i) == 3) by = i;
        }
        c.base = std::pair{bx, by};
        return c;
    }
    throw std::logic_error("pattern without perfect matching outside the known classes");
}

std::pair<int, int> base_edge(BipartitePattern p) {
    const auto c = classify(p);
    if (c.kind != PatternKind::B113) throw std::invalid_argument("base edge is defined only for B113 patterns");
    return *c.base;
}

Fact1Report verify_fact1() {
    Fact1Report r;
    for (auto kind : {PatternKind::HasPM, PatternKind::B033, PatternKind::B023, PatternKind::B113,
                      PatternKind::Deficient}) {
        r.counts[kind] = {};
    }
    std::map<BipartitePattern, std::size_t> by_iso;
    for (unsigned mask = 0; mask < 512; ++mask) {
        const BipartitePattern p(static_cast<std::uint16_t>(mask));
        ++r.patterns;
        const int e = p.edge_count();
        PatternClass c;
        try {
            c = classify(p);
        } catch (const std::logic_error&) {
            ++r.violations;
            continue;
        }
        ++r.counts[c.kind][static_cast<std::size_t>(e)];
        const bool pm = c.kind == PatternKind::HasPM;
        if (e >= 7 && !pm) ++r.violations;
        if (e == 6 && !pm && c.kind != PatternKind::B033) ++r.violations;
        if (e == 5 && !pm && c.kind != PatternKind::B023 && c.kind != PatternKind::B113) ++r.violations;
        if (!pm && (e == 5 || e == 6)) {
            const auto form = isomorphism_form(p);
            if (by_iso[form]++ == 0) {
                Fact1Report::IsoClass ic;
                ic.representative = form;
                ic.edges = e;
                const auto xs = sorted_degrees(form, true);
                const auto ys = sorted_degrees(form, false);
                ic.degrees = xs[0] <= ys[0] ? xs : ys;
                ic.kind = c.kind;
                r.classes.push_back(ic);
            }
        }
    }
    for (auto& ic : r.classes) ic.labeled = by_iso[ic.representative];

    // {x1y1, x1y2, x1y3, x2y1, x3y1} has base edge x1y1.
    const auto reference = BipartitePattern::from_pairs({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
    const auto swapped = reference.relabel({2, 1, 0}, {0, 1, 2});
    r.base_edge_consistent = base_edge(reference) == std::pair{0, 0} && base_edge(swapped) == std::pair{2, 0};
    return r;
}

bool LinkGraph::contains(Vertex a, Vertex b) const {
    return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
        return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
}

LinkGraph link_bipartite(const Hypergraph3& h, Vertex v, std::span<const Vertex> a, std::span<const Vertex> b) {
    if (v >= h.n()) throw std::out_of_range("link apex out of range");
    VertexSet seen;
    require_disjoint(v, a, seen);
    require_disjoint(v, b, seen);
    LinkGraph g;
    g.apex = v;
    const bool square = a.size() == 3 && b.size() == 3;
    if (square) g.pattern = BipartitePattern{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const VertexSet nb = h.pair_link(v, a[i]);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!nb.contains(b[j])) continue;
            g.edges.emplace_back(a[i], b[j]);
            if (square) g.pattern->set(static_cast<int>(i), static_cast<int>(j));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

LinkGraph link_within(const Hypergraph3& h, Vertex v, std::span<const Vertex> a) {
    if (v >= h.n()) throw std::out_of_range("link apex out of range");
    VertexSet seen;
    require_disjoint(v, a, seen);
    LinkGraph g;
    g.apex = v;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const VertexSet nb = h.pair_link(v, a[i]);
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (nb.contains(a[j])) g.edges.emplace_back(std::min(a[i], a[j]), std::max(a[i], a[j]));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

LinkGraph link_chain(const Hypergraph3& h, Vertex v, std::span<const std::vector<Vertex>> sets) {
    if (sets.size() < 2 || sets.size() > 5) throw std::invalid_argument("link chains take 2 to 5 vertex sets");
    VertexSet seen;
    for (const auto& s : sets) require_disjoint(v, s, seen);
    LinkGraph g;
    g.apex = v;
    for (std::size_t k = 0; k + 1 < sets.size(); ++k) {
        auto part = link_bipartite(h, v, sets[k], sets[k + 1]);
        g.edges.insert(g.edges.end(), part.edges.begin(), part.edges.end());
    }
    if (sets.size() == 2 && sets[0].size() == 3 && sets[1].size() == 3) {
        g.pattern = link_bipartite(h, v, sets[0], sets[1]).pattern;
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

BipartitePattern link_pattern(const Hypergraph3& h, Vertex v, const Edge& e, const Edge& f) {
    return *link_bipartite(h, v, e.vertices(), f.vertices()).pattern;
}

}  // namespace hypermatch
