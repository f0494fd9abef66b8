#include "hypermatch/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hypermatch/augment.hpp"
#include "hypermatch/link.hpp"

namespace hypermatch {

namespace {

bool in_hnd(VertexSet triple, VertexSet w) {
    const std::size_t k = (triple & w).size();
    return k == 1 || k == 2;
}

/// Deficiency of H[alive] against H_{|alive|,|W|}(alive - w, alive & w).
std::size_t deficiency_on(const Hypergraph3& h, VertexSet alive, VertexSet w) {
    w &= alive;
    std::size_t present = 0;
    for (const Edge& e : h.edges()) {
        const VertexSet m = e.mask();
        if (m.subset_of(alive) && in_hnd(m, w)) ++present;
    }
    return hnd_edge_count((alive - w).size(), w.size()) - present;
}

std::vector<std::size_t> badness_on(const Hypergraph3& h, VertexSet alive, VertexSet w) {
    std::vector<std::size_t> bad(h.n(), 0);
    const auto verts = alive.to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            for (std::size_t k = j + 1; k < verts.size(); ++k) {
                const Vertex a = verts[i], b = verts[j], c = verts[k];
                if (!in_hnd(VertexSet{a, b, c}, w) || h.has_edge(a, b, c)) continue;
                ++bad[a];
                ++bad[b];
                ++bad[c];
            }
    return bad;
}

ClosenessReport report_on(const Hypergraph3& h, VertexSet alive, const Partition& p, double alpha) {
    if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
    ClosenessReport r;
    r.partition = p;
    r.alpha = alpha;
    const double n = static_cast<double>(alive.size());
    r.deficiency = deficiency_on(h, alive, p.w);
    r.epsilon = n > 0 ? static_cast<double>(r.deficiency) / (n * n * n) : 0.0;
    r.bad_threshold = alpha * n * n;
    r.badness = badness_on(h, alive, p.w & alive);
    alive.for_each([&](Vertex v) {
        if (static_cast<double>(r.badness[v]) <= r.bad_threshold) return;
        if (p.w.contains(v)) r.bad_w.insert(v);
        else r.bad_v.insert(v);
    });
    return r;
}

VertexSet hill_climb(const Hypergraph3& h, VertexSet w) {
    const VertexSet all = h.vertices();
    std::size_t current = deficiency_on(h, all, w);
    while (current > 0) {
        std::size_t best = current;
        VertexSet best_w = w;
        w.for_each([&](Vertex out) {
            (all - w).for_each([&](Vertex in) {
                VertexSet cand = w;
                cand.erase(out);
                cand.insert(in);
                const std::size_t def = deficiency_on(h, all, cand);
                if (def < best) {
                    best = def;
                    best_w = cand;
                }
            });
        });
        if (best >= current) break;
        current = best;
        w = best_w;
    }
    return w;
}

std::vector<Vertex> by_degree(const Hypergraph3& h) {
    std::vector<Vertex> order(h.n());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    return order;
}

VertexSet fill_by_degree(const Hypergraph3& h, VertexSet w, std::size_t d) {
    for (Vertex v : by_degree(h)) {
        if (w.size() >= d) break;
        w.insert(v);
    }
    return w;
}

/// VVW edge {v1, v2, w} on uncovered vertices, if any.
std::optional<Edge> direct_vvw(const Hypergraph3& h, VertexSet free_v, VertexSet free_w) {
    std::optional<Edge> found;
    free_w.for_each([&](Vertex w) {
        if (found) return;
        free_v.for_each([&](Vertex v1) {
            if (found) return;
            const VertexSet partners = h.pair_link(w, v1) & free_v;
            for (Vertex v2 : partners.to_vector()) {
                if (v2 > v1) {
                    found = Edge(v1, v2, w);
                    return;
                }
            }
        });
    });
    return found;
}

/// The V vertices and the W vertex of a VVW edge.
struct SplitEdge {
    Vertex a1, a2, w;
};

SplitEdge split(const Edge& e, VertexSet w) {
    std::vector<Vertex> vs;
    Vertex wv = 0;
    for (Vertex x : e.vertices()) {
        if (w.contains(x)) wv = x;
        else vs.push_back(x);
    }
    return {vs.at(0), vs.at(1), wv};
}

/// Every VVW triple with one vertex from each of `t`, e1, e2 is present.
bool good_for(const Hypergraph3& h, VertexSet w, const std::array<Vertex, 3>& t, const Edge& e1, const Edge& e2) {
    for (Vertex p : t)
        for (Vertex q : e1.vertices())
            for (Vertex r : e2.vertices()) {
                const VertexSet tri{p, q, r};
                if ((tri & w).size() == 1 && !h.has_edge(p, q, r)) return false;
            }
    return true;
}

/// Good-case routine on the sub-hypergraph H[alive] with classes alive - w, alive & w.
GoodCaseResult good_case_on(const Hypergraph3& h, VertexSet alive, VertexSet w, std::size_t target) {
    w &= alive;
    GoodCaseResult out;
    Matching& m = out.matching;
    while (m.size() < target) {
        const VertexSet free = alive - m.covered();
        const VertexSet free_v = free - w;
        const VertexSet free_w = free & w;
        if (free_w.empty()) {
            out.stall_reason = "no uncovered W vertex left";
            return out;
        }
        if (auto e = direct_vvw(h, free_v, free_w)) {
            m.add(*e);
            ++out.direct_edges;
            continue;
        }
        const auto fv = free_v.to_vector();
        const auto fw = free_w.to_vector();
        const auto& me = m.edges();
        bool swapped = false;
        for (std::size_t i = 0; i < fv.size() && !swapped; ++i)
            for (std::size_t j = i + 1; j < fv.size() && !swapped; ++j)
                for (Vertex x : fw) {
                    const std::array<Vertex, 3> t{fv[i], fv[j], x};
                    for (std::size_t a = 0; a < me.size() && !swapped; ++a)
                        for (std::size_t b = a + 1; b < me.size() && !swapped; ++b) {
                            if (!good_for(h, w, t, me[a], me[b])) continue;
                            const Edge e1 = me[a], e2 = me[b];
                            const SplitEdge s1 = split(e1, w), s2 = split(e2, w);
                            m.remove(e1);
                            m.remove(e2);
                            m.add(Edge(x, s1.a1, s2.a1));
                            m.add(Edge(fv[i], s1.w, s2.a2));
                            m.add(Edge(fv[j], s1.a2, s2.w));
                            ++out.swaps;
                            swapped = true;
                        }
                    if (swapped) break;
                }
        if (!swapped) {
            out.stall_reason = "no VVW edge on uncovered vertices and no good pair";
            return out;
        }
    }
    out.success = true;
    return out;
}

}  // namespace

std::size_t hnd_edge_count(std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(binom2(static_cast<std::int64_t>(a)) * static_cast<std::int64_t>(b) +
                                    static_cast<std::int64_t>(a) * binom2(static_cast<std::int64_t>(b)));
}

std::size_t deficiency(const Hypergraph3& h, const Partition& p) {
    p.validate();
    if (p.n != h.n()) throw std::invalid_argument("partition and hypergraph sizes differ");
    return deficiency_on(h, h.vertices(), p.w);
}

ClosenessReport classify_goodness(const Hypergraph3& h, const Partition& p, double alpha) {
    p.validate();
    if (p.n != h.n()) throw std::invalid_argument("partition and hypergraph sizes differ");
    return report_on(h, h.vertices(), p, alpha);
}

std::vector<Vertex> bottom_vertices(const Hypergraph3& h, const Matching& m) {
    const VertexSet free = m.uncovered(h);
    std::vector<Vertex> bottoms;
    const auto& me = m.edges();
    for (std::size_t i = 0; i < me.size(); ++i) {
        std::array<std::size_t, 3> votes{};
        free.for_each([&](Vertex v) {
            for (std::size_t j = 0; j < me.size(); ++j) {
                if (j == i) continue;
                const auto c = classify(link_pattern(h, v, me[i], me[j]));
                if (c.kind == PatternKind::B113) ++votes[static_cast<std::size_t>(c.base->first)];
            }
        });
        const auto top = std::max_element(votes.begin(), votes.end());
        if (*top > 0) bottoms.push_back(me[i][static_cast<std::size_t>(top - votes.begin())]);
    }
    return bottoms;
}

ClosenessReport find_partition(const Hypergraph3& h, std::size_t d, PartitionSearch mode, double alpha) {
    const std::size_t n = h.n();
    if (d > n) throw std::invalid_argument("d exceeds the vertex count");
    Partition p;
    p.n = n;
    p.d = d;
    switch (mode) {
        case PartitionSearch::Exhaustive: {
            std::uint64_t count = 1;
            for (std::size_t i = 1; i <= std::min(d, n - d); ++i) {
                count = count * (n - std::min(d, n - d) + i) / i;
                if (count > kExhaustivePartitionCap) {
                    throw std::invalid_argument("exhaustive partition search refused: C(n,d) exceeds 10^6");
                }
            }
            std::vector<Vertex> idx(d);
            std::iota(idx.begin(), idx.end(), Vertex{0});
            std::size_t best = SIZE_MAX;
            while (true) {
                const VertexSet w = VertexSet::from(idx);
                const std::size_t def = deficiency_on(h, h.vertices(), w);
                if (def < best) {
                    best = def;
                    p.w = w;
                }
                std::size_t i = d;
                while (i > 0 && idx[i - 1] == n - d + (i - 1)) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
            }
            break;
        }
        case PartitionSearch::Local:
            p.w = hill_climb(h, fill_by_degree(h, VertexSet{}, d));
            break;
        case PartitionSearch::Bottom: {
            VertexSet seed;
            for (Vertex b : bottom_vertices(h, greedy_matching(h))) {
                if (seed.size() < d) seed.insert(b);
            }
            p.w = hill_climb(h, fill_by_degree(h, seed, d));
            break;
        }
    }
    return report_on(h, h.vertices(), p, alpha);
}

GoodCaseResult good_case_matching(const Hypergraph3& h, const Partition& p, std::size_t d, double alpha) {
    p.validate();
    if (p.n != h.n()) throw std::invalid_argument("partition and hypergraph sizes differ");
    const bool all_good = report_on(h, h.vertices(), p, alpha).all_good();
    GoodCaseResult r = good_case_on(h, h.vertices(), p.w, d);
    r.all_good = all_good;
    return r;
}

StagedResult staged_matching(const Hypergraph3& h, const Partition& p, std::size_t d, const StageConfig& cfg) {
    p.validate();
    if (p.n != h.n()) throw std::invalid_argument("partition and hypergraph sizes differ");
    StagedResult out;
    StageLog& log = out.log;
    auto fail = [&](std::string stage, std::string obligation) {
        log.failed_stage = std::move(stage);
        log.obligation = std::move(obligation);
        out.success = false;
        return out;
    };

    const VertexSet all = h.vertices();
    const ClosenessReport start = report_on(h, all, p, cfg.alpha);
    log.bad_v = start.bad_v;
    log.bad_w = start.bad_w;

    // M1: a c-matching inside V1 = V + W_bad.
    const std::size_t c = start.bad_w.size();
    log.c = c;
    if (c > d) return fail("M1", "more bad W vertices than the target size");
    const VertexSet v1 = p.v() | start.bad_w;
    const VertexSet w1 = p.w - start.bad_w;
    Matching m1;
    if (c > 0) {
        const auto induced = remove_vertices(h, all - v1);
        const auto a = static_cast<std::int64_t>(v1.size());
        log.m1_min_degree = induced.graph.n() > 0 ? static_cast<std::int64_t>(min_degree(induced.graph, 1)) : 0;
        log.m1_degree_bound = binom2(a - 1) - binom2(a - static_cast<std::int64_t>(c));
        log.m1_degree_condition = log.m1_min_degree > log.m1_degree_bound;
        SolveBudget budget = cfg.m1_budget;
        budget.target = c;
        const SolveReport r = max_matching_in_subset(h, v1, budget);
        if (r.matching.size() < c) {
            log.stages.push_back(r.matching);
            return fail("M1", "no matching of size " + std::to_string(c) + " inside V u W_bad");
        }
        for (std::size_t i = 0; i < c; ++i) m1.add(r.matching.edges()[i]);
    }
    log.stages.push_back(m1);

    // Residual H1 with classes V2, W1 and target b = d - c.
    const VertexSet alive1 = all - m1.covered();
    const VertexSet v2 = v1 - m1.covered();
    const std::size_t b = d - c;
    Partition p1 = p;
    p1.w = w1;
    const ClosenessReport r1 = report_on(h, alive1, p1, cfg.alpha);
    log.bad_after_m1 = r1.bad_v | r1.bad_w;
    const VertexSet v2_bad = r1.bad_v & v2;

    // M2: a V2 V2 W1 edge through every useful bad vertex.
    const double n1 = static_cast<double>(alive1.size());
    Matching m2;
    v2_bad.for_each([&](Vertex v) {
        std::size_t pairs = 0;
        (v2 - VertexSet{v}).for_each([&](Vertex x) { pairs += (h.pair_link(v, x) & w1).size(); });
        if (static_cast<double>(pairs) < cfg.useful_theta * n1 * n1) return;
        log.useful.insert(v);
        const VertexSet free = alive1 - m2.covered();
        if (!free.contains(v)) return;
        std::optional<Edge> pick;
        ((v2 & free) - VertexSet{v}).for_each([&](Vertex x) {
            if (pick) return;
            const VertexSet ws = h.pair_link(v, x) & w1 & free;
            if (!ws.empty()) pick = Edge(v, x, ws.front());
        });
        if (pick) m2.add(*pick);
    });
    log.m2 = m2.size();
    log.stages.push_back(m2);
    if ((log.useful - m2.covered()).size() > 0) {
        return fail("M2", "useful bad vertex without a V2 V2 W1 edge");
    }

    // M3: a V3 V3 V3 edge through every remaining bad vertex.
    const VertexSet alive2 = alive1 - m2.covered();
    const VertexSet v3 = v2 - m2.covered();
    const VertexSet w2 = w1 - m2.covered();
    Matching m3;
    for (Vertex v : (v2_bad & v3).to_vector()) {
        if (m3.covered().contains(v)) continue;
        const VertexSet free = v3 - m3.covered();
        std::optional<Edge> pick;
        (free - VertexSet{v}).for_each([&](Vertex x) {
            if (pick) return;
            const VertexSet zs = h.pair_link(v, x) & (free - VertexSet{v, x});
            for (Vertex z : zs.to_vector()) {
                if (z > x) {
                    pick = Edge(v, x, z);
                    return;
                }
            }
        });
        if (!pick) {
            log.stages.push_back(m3);
            return fail("M3", "bad vertex " + std::to_string(v) + " has no edge inside V3");
        }
        m3.add(*pick);
    }
    log.m3 = m3.size();
    log.stages.push_back(m3);
    if (m2.size() + 2 * m3.size() > b) return fail("M4", "not enough W vertices to rebalance M3");

    // M4: one V4 W2 W2 edge per M3 edge.
    const VertexSet alive3 = alive2 - m3.covered();
    const VertexSet v4 = v3 - m3.covered();
    Matching m4;
    for (std::size_t i = 0; i < m3.size(); ++i) {
        const VertexSet free_w = w2 - m4.covered();
        const VertexSet free_v = v4 - m4.covered();
        std::optional<Edge> pick;
        free_w.for_each([&](Vertex x) {
            if (pick) return;
            free_w.for_each([&](Vertex y) {
                if (pick || y <= x) return;
                const VertexSet vs = h.pair_link(x, y) & free_v;
                if (!vs.empty()) pick = Edge(vs.front(), x, y);
            });
        });
        if (!pick) {
            log.stages.push_back(m4);
            return fail("M4", "no V4 W2 W2 edge left");
        }
        m4.add(*pick);
    }
    log.stages.push_back(m4);

    // M5: good case on the residual.
    const VertexSet alive4 = alive3 - m4.covered();
    const VertexSet w3 = w2 - m4.covered();
    const std::size_t target = b - m2.size() - 2 * m3.size();
    GoodCaseResult r5 = good_case_on(h, alive4, w3, target);
    log.stages.push_back(r5.matching);
    if (!r5.success) return fail("M5", r5.stall_reason);

    for (const Matching& stage : log.stages)
        for (const Edge& e : stage.edges()) out.matching.add(e);
    out.success = out.matching.size() == d;
    if (!out.success) return fail("M5", "stages do not add up to d");
    return out;
}

}  // namespace hypermatch
