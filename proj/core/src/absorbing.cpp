#include "hypermatch/absorbing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hypermatch/random.hpp"

namespace hypermatch {

namespace {

std::vector<VertexSet> all_triples(VertexSet pool) {
    const auto vs = pool.to_vector();
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            for (std::size_t k = j + 1; k < vs.size(); ++k) out.push_back(VertexSet{vs[i], vs[j], vs[k]});
    return out;
}

std::vector<VertexSet> sampled_triples(VertexSet pool, std::size_t count, std::uint64_t seed) {
    const auto vs = pool.to_vector();
    CounterRng rng(seed);
    std::vector<VertexSet> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto pick = rng.sample(vs.size(), 3);
        out.push_back(VertexSet{vs[pick[0]], vs[pick[1]], vs[pick[2]]});
    }
    return out;
}

std::uint64_t triple_count(std::size_t n) { return static_cast<std::uint64_t>(binom3(static_cast<std::int64_t>(n))); }

}  // namespace

std::optional<std::array<Edge, 2>> absorbing_pair(const Hypergraph3& h, const Edge& e, VertexSet t) {
    if (t.size() != 3) throw std::invalid_argument("absorbed set must hold three vertices");
    if (t.intersects(e.mask())) throw std::invalid_argument("absorbed triple meets the absorbing edge");
    const VertexSet six = e.mask() | t;
    const Vertex a = six.front();
    const auto rest = (six - VertexSet{a}).to_vector();
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            const VertexSet first{a, rest[i], rest[j]};
            const auto other = (six - first).to_vector();
            if (h.has_edge(a, rest[i], rest[j]) && h.has_edge(other[0], other[1], other[2])) {
                return std::array<Edge, 2>{Edge(a, rest[i], rest[j]), Edge(other[0], other[1], other[2])};
            }
        }
    return std::nullopt;
}

bool absorbs(const Hypergraph3& h, const Edge& e, VertexSet t) { return absorbing_pair(h, e, t).has_value(); }

AbsorbingMatching find_absorbing(const Hypergraph3& h, const AbsorbConfig& cfg) {
    if (cfg.gamma <= 0.0 || cfg.redundancy == 0) throw std::invalid_argument("gamma and redundancy must be positive");
    const std::size_t n = h.n();
    AbsorbingMatching out;
    out.gamma = cfg.gamma;
    out.redundancy = cfg.redundancy;
    out.contract = cfg.contract;
    const double g3 = cfg.gamma * cfg.gamma * cfg.gamma;
    out.size_cap = cfg.max_size ? *cfg.max_size
                   : cfg.contract ? static_cast<std::size_t>(std::floor(g3 * static_cast<double>(n) / 3.0))
                                  : n / 6;
    if (n > 0) {
        const double need = (0.5 + 2.0 * cfg.gamma) * static_cast<double>(binom2(static_cast<std::int64_t>(n)));
        out.hypothesis_holds = static_cast<double>(min_degree(h, 1)) >= need;
    }

    // Target family: every triple when few enough, else a seeded sample.
    std::vector<VertexSet> family = triple_count(n) <= cfg.sample_triples
                                        ? all_triples(h.vertices())
                                        : sampled_triples(h.vertices(), cfg.sample_triples, cfg.seed);
    std::vector<std::size_t> have(family.size(), 0);

    std::vector<std::size_t> order(h.num_edges());
    std::iota(order.begin(), order.end(), std::size_t{0});
    CounterRng rng(cfg.seed);
    rng.shuffle(order);

    while (out.matching.size() < out.size_cap) {
        const VertexSet used = out.matching.covered();
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < family.size(); ++i)
            if (!family[i].intersects(used) && have[i] < cfg.redundancy) active.push_back(i);
        if (active.empty()) break;

        std::size_t best_gain = 0;
        std::optional<std::size_t> best;
        for (std::size_t idx : order) {
            const Edge& e = h.edges()[idx];
            if (e.mask().intersects(used)) continue;
            std::size_t gain = 0;
            for (std::size_t i : active)
                if (!family[i].intersects(e.mask()) && absorbs(h, e, family[i])) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = idx;
            }
        }
        if (!best) break;
        const Edge& e = h.edges()[*best];
        out.matching.add(e);
        for (std::size_t i = 0; i < family.size(); ++i)
            if (!family[i].intersects(e.mask()) && absorbs(h, e, family[i])) ++have[i];
    }

    // Verification on the residual.
    const VertexSet residual = h.vertices() - out.matching.covered();
    out.exhaustive = residual.size() <= cfg.exhaustive_limit || triple_count(residual.size()) <= cfg.sample_triples;
    if (residual.size() >= 3) {
        out.triples = out.exhaustive ? all_triples(residual)
                                     : sampled_triples(residual, cfg.sample_triples, splitmix_at(cfg.seed, 1));
    }
    out.absorbers.resize(out.triples.size());
    out.min_absorbers = out.triples.empty() ? out.matching.size() : SIZE_MAX;
    for (std::size_t i = 0; i < out.triples.size(); ++i) {
        for (std::uint32_t j = 0; j < out.matching.size(); ++j)
            if (absorbs(h, out.matching.edges()[j], out.triples[i])) out.absorbers[i].push_back(j);
        out.min_absorbers = std::min(out.min_absorbers, out.absorbers[i].size());
    }
    out.success = !out.matching.empty() && out.min_absorbers >= cfg.redundancy;

    if (cfg.contract) {
        const double g6 = g3 * g3;
        const auto gamma_cap = static_cast<std::size_t>(std::floor(g6 * static_cast<double>(n)));
        out.capacity = std::min(gamma_cap, 3 * out.matching.size()) / 3 * 3;
    } else {
        out.capacity = 3 * out.matching.size();
    }
    return out;
}

namespace {

class Assigner {
public:
    Assigner(const Hypergraph3& h, const Matching& m, std::uint64_t limit) : h_(h), m_(m), limit_(limit) {
        used_.assign(m.size(), false);
        chosen_.assign(m.size(), std::nullopt);
    }

    bool run(VertexSet rest) {
        if (rest.empty()) return true;
        if (nodes_ >= limit_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        const Vertex u = rest.front();
        const auto others = (rest - VertexSet{u}).to_vector();
        for (std::size_t i = 0; i < others.size(); ++i)
            for (std::size_t j = i + 1; j < others.size(); ++j) {
                const VertexSet t{u, others[i], others[j]};
                for (std::size_t k = 0; k < m_.size(); ++k) {
                    if (used_[k]) continue;
                    auto pair = absorbing_pair(h_, m_.edges()[k], t);
                    if (!pair) continue;
                    used_[k] = true;
                    chosen_[k] = *pair;
                    if (run(rest - t)) return true;
                    used_[k] = false;
                    chosen_[k].reset();
                    if (exhausted_) return false;
                }
            }
        return false;
    }

    Matching result() const {
        Matching out;
        for (std::size_t k = 0; k < m_.size(); ++k) {
            if (chosen_[k]) {
                out.add((*chosen_[k])[0]);
                out.add((*chosen_[k])[1]);
            } else {
                out.add(m_.edges()[k]);
            }
        }
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    const Hypergraph3& h_;
    const Matching& m_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<bool> used_;
    std::vector<std::optional<std::array<Edge, 2>>> chosen_;
};

}  // namespace

LeftoverResult absorb_leftover(const Hypergraph3& h, const AbsorbingMatching& a, VertexSet leftover,
                               std::uint64_t node_limit) {
    LeftoverResult out;
    if (leftover.intersects(a.matching.covered())) throw std::invalid_argument("leftover meets V(M*)");
    if (!leftover.subset_of(h.vertices())) throw std::invalid_argument("leftover outside the vertex range");
    if (leftover.size() % 3 != 0) throw std::invalid_argument("leftover size must be divisible by 3");
    if (leftover.empty()) {
        out.success = true;
        out.matching = a.matching;
        return out;
    }
    if (leftover.size() > a.capacity) {
        out.reason = "leftover of " + std::to_string(leftover.size()) + " exceeds capacity " +
                     std::to_string(a.capacity);
        return out;
    }
    Assigner assigner(h, a.matching, node_limit);
    const bool ok = assigner.run(leftover);
    out.nodes = assigner.nodes();
    if (!ok) {
        out.reason = assigner.exhausted() ? "backtracking budget exhausted" : "no assignment of triples to absorbers";
        return out;
    }
    out.success = true;
    out.matching = assigner.result();
    return out;
}

PipelineReport perfect_via_absorbing(const Hypergraph3& h, const PipelineConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    PipelineReport out;
    auto finish = [&]() {
        out.report.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return out;
    };
    if (h.n() % 3 != 0) {
        out.failed_phase = "order";
        out.detail = "vertex count not divisible by 3";
        return finish();
    }
    out.absorbing = find_absorbing(h, cfg.absorb);
    const Matching& star = out.absorbing.matching;

    const auto rest = remove_vertices(h, star.covered());
    const std::size_t want = rest.graph.n() / 3;
    const AugmentResult aug = augment_solve(rest.graph, want, cfg.augment);

    Matching combined = star;
    for (const Edge& e : aug.report.matching.edges()) {
        combined.add(Edge(rest.original[e[0]], rest.original[e[1]], rest.original[e[2]]));
    }
    const VertexSet leftover = h.vertices() - combined.covered();
    out.leftover = leftover.size();
    if (leftover.empty()) {
        out.report.matching = std::move(combined);
        out.report.optimal = true;
        out.success = true;
        return finish();
    }
    if (out.leftover > out.absorbing.capacity) {
        out.report.matching = std::move(combined);
        out.failed_phase = "augment";
        out.detail = "augmenting search left " + std::to_string(out.leftover) + " vertices, capacity " +
                     std::to_string(out.absorbing.capacity);
        return finish();
    }
    const LeftoverResult absorbed = absorb_leftover(h, out.absorbing, leftover, cfg.backtrack_nodes);
    if (!absorbed.success) {
        out.report.matching = std::move(combined);
        out.failed_phase = "absorb";
        out.detail = absorbed.reason;
        return finish();
    }
    Matching full = absorbed.matching;
    for (const Edge& e : combined.edges())
        if (!e.mask().intersects(star.covered())) full.add(e);
    out.report.matching = std::move(full);
    out.report.optimal = true;
    out.success = out.report.matching.covered() == h.vertices();
    if (!out.success) out.failed_phase = "absorb";
    return finish();
}

}  // namespace hypermatch
