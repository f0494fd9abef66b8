#include "hypermatch/augment.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "hypermatch/random.hpp"

namespace hypermatch {

void AugmentConfig::validate() const {
    if (k_max == 0) throw std::invalid_argument("k_max must be positive");
    if (uncovered_slack > 3) throw std::invalid_argument("uncovered slack must lie in 0..3");
    if (subset_cap == 0 || uncovered_cap == 0) throw std::invalid_argument("candidate caps must be positive");
    if (iteration_limit == 0 || subproblem_nodes == 0) throw std::invalid_argument("limits must be positive");
}

Matching apply_move(const Matching& m, const Move& move) {
    Matching out = m;
    for (const Edge& e : move.removed) out.remove(e);
    for (const Edge& e : move.added) out.add(e);
    return out;
}

Matching MoveTrace::replay() const {
    Matching m = initial;
    for (const Move& mv : moves) m = apply_move(m, mv);
    return m;
}

Matching greedy_matching(const Hypergraph3& h, std::uint64_t seed) {
    std::vector<std::size_t> order(h.num_edges());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (seed != 0) {
        CounterRng rng(seed);
        rng.shuffle(order);
    }
    Matching m;
    for (std::size_t i : order) {
        const Edge& e = h.edges()[i];
        if (!e.mask().intersects(m.covered())) m.add(e);
    }
    return m;
}

namespace {

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;  // stays <= cap * n, no overflow for n <= 64
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(c);
}

/// All k-subsets of [0, n) in lexicographic order when there are at most
/// `cap` of them, otherwise `cap` sampled subsets.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k, std::size_t cap, CounterRng& rng) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    if (binomial_capped(n, k, cap) <= cap) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true) {
            out.push_back(idx);
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        return out;
    }
    for (std::size_t s = 0; s < cap; ++s) {
        auto pick = rng.sample(n, k);
        std::sort(pick.begin(), pick.end());
        out.push_back(std::move(pick));
    }
    return out;
}

}  // namespace

std::optional<AugmentStep> augment_once(const Hypergraph3& h, const Matching& m, const AugmentConfig& cfg) {
    cfg.validate();
    const VertexSet free = m.uncovered(h);

    for (const Edge& e : h.edges()) {
        if (e.mask().subset_of(free)) {
            Move mv{{}, {e}, e.mask()};
            return AugmentStep{apply_move(m, mv), mv};
        }
    }
    if (free.size() < 3) return std::nullopt;

    const std::vector<Vertex> free_list = free.to_vector();
    CounterRng rng(splitmix_at(cfg.seed, m.size()));
    SolveBudget sub;
    sub.node_limit = cfg.subproblem_nodes;

    const std::size_t k_top = std::min(cfg.k_max, m.size());
    for (std::size_t k = 1; k <= k_top; ++k) {
        const std::size_t s = std::min(free_list.size(), std::max<std::size_t>(3, k + cfg.uncovered_slack));
        sub.target = k + 1;
        for (const auto& pick : index_subsets(m.size(), k, cfg.subset_cap, rng)) {
            VertexSet base;
            for (std::size_t i : pick) base |= m.edges()[i].mask();
            for (const auto& upick : index_subsets(free_list.size(), s, cfg.uncovered_cap, rng)) {
                VertexSet region = base;
                for (std::size_t i : upick) region.insert(free_list[i]);
                const SolveReport r = max_matching_in_subset(h, region, sub);
                if (r.matching.size() < k + 1) continue;
                Move mv;
                for (std::size_t i : pick) mv.removed.push_back(m.edges()[i]);
                mv.added.assign(r.matching.edges().begin(), r.matching.edges().begin() + static_cast<long>(k + 1));
                for (const Edge& e : mv.added) mv.consumed |= e.mask() & free;
                return AugmentStep{apply_move(m, mv), mv};
            }
        }
    }
    return std::nullopt;
}

AugmentResult augment_solve(const Hypergraph3& h, std::size_t d, const AugmentConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    AugmentResult out;
    out.trace.initial = greedy_matching(h, cfg.seed);
    Matching m = out.trace.initial;
    while (m.size() < d) {
        if (out.iterations >= cfg.iteration_limit) {
            out.report.budget_exhausted = true;
            break;
        }
        ++out.iterations;
        auto step = augment_once(h, m, cfg);
        if (!step) {
            out.stalled = true;
            break;
        }
        m = std::move(step->matching);
        out.trace.moves.push_back(std::move(step->move));
    }
    out.report.matching = std::move(m);
    out.report.target_met = out.report.matching.size() >= d;
    out.report.optimal = 3 * out.report.matching.size() + 2 >= h.n();
    out.report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace hypermatch
