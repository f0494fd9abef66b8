#include "hypermatch_tools/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

#include "hypermatch/augment.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/exact_solver.hpp"
#include "hypermatch_tools/parallel.hpp"

namespace hypermatch::tools {

using nlohmann::json;

TightnessReport verify_tightness(std::size_t n_max) {
    TightnessReport r;
    for (std::size_t n = 6; n <= n_max; n += 3) {
        const auto inst = extremal_star(n);
        TightnessRow row;
        row.n = n;
        row.delta1 = min_degree(inst.graph, 1);
        const auto sn = static_cast<std::int64_t>(n);
        row.expected_delta1 = binom2(sn - 1) - binom2(2 * sn / 3);
        const auto rep = max_matching(inst.graph);
        row.max_matching = rep.matching.size();
        row.optimal = rep.optimal;
        row.nodes = rep.nodes;
        row.ok = static_cast<std::int64_t>(row.delta1) == row.expected_delta1 &&
                 row.expected_delta1 == threshold(sn, sn / 3) && row.optimal && row.max_matching == n / 3 - 1 &&
                 rep.matching.valid_in(inst.graph);
        r.ok = r.ok && row.ok;
        r.rows.push_back(row);
    }
    return r;
}

json tightness_json(const TightnessReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"delta1", row.delta1},
                        {"expected_delta1", row.expected_delta1},
                        {"max_matching", row.max_matching},
                        {"perfect_matching", row.max_matching == row.n / 3},
                        {"optimal", row.optimal},
                        {"nodes", row.nodes},
                        {"ok", row.ok}});
    }
    return {{"schema", "hypermatch.verify.tightness/1"}, {"rows", rows}, {"ok", r.ok}};
}

namespace {

void collect_matchings(const std::vector<std::uint64_t>& vmask, std::size_t start, std::size_t left,
                       std::uint64_t used, std::uint32_t chosen, std::vector<std::uint32_t>& out) {
    if (left == 0) {
        out.push_back(chosen);
        return;
    }
    for (std::size_t t = start; t < vmask.size(); ++t) {
        if (vmask[t] & used) continue;
        collect_matchings(vmask, t + 1, left - 1, used | vmask[t], chosen | (std::uint32_t{1} << t), out);
    }
}

}  // namespace

ThresholdSweep run_threshold_sweep(std::size_t n, std::size_t d, std::size_t threads) {
    if (n < 3 || n > kThresholdSweepMaxN) throw std::invalid_argument("threshold sweep supports 3 <= n <= 6");
    if (3 * d > n) throw std::invalid_argument("threshold sweep needs 3d <= n");
    ThresholdSweep s;
    s.n = n;
    s.d = d;
    if (d >= 1) s.formula = threshold(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));

    std::vector<std::uint64_t> vmask;
    std::vector<std::uint32_t> incidence(n, 0);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                const auto t = static_cast<std::uint32_t>(vmask.size());
                vmask.push_back((1ULL << a) | (1ULL << b) | (1ULL << c));
                for (Vertex x : {a, b, c}) incidence[x] |= std::uint32_t{1} << t;
            }
    s.triples = vmask.size();
    s.instances = std::uint64_t{1} << s.triples;
    std::vector<std::uint32_t> matchings;
    collect_matchings(vmask, 0, d, 0, 0, matchings);

    const std::size_t max_deg = static_cast<std::size_t>(binom2(static_cast<std::int64_t>(n) - 1));
    const std::uint64_t blocks = std::min<std::uint64_t>(s.instances, 1024);
    const std::uint64_t per_block = s.instances / blocks;
    std::vector<std::vector<std::uint64_t>> totals(blocks, std::vector<std::uint64_t>(max_deg + 1, 0));
    std::vector<std::vector<std::uint64_t>> withouts(blocks, std::vector<std::uint64_t>(max_deg + 1, 0));

    parallel_for(blocks, threads, [&](std::size_t b) {
        auto& tot = totals[b];
        auto& wo = withouts[b];
        const std::uint64_t lo = b * per_block;
        for (std::uint64_t m = lo; m < lo + per_block; ++m) {
            const auto mask = static_cast<std::uint32_t>(m);
            std::size_t delta = max_deg;
            for (std::size_t v = 0; v < n; ++v)
                delta = std::min<std::size_t>(delta, static_cast<std::size_t>(std::popcount(mask & incidence[v])));
            ++tot[delta];
            const bool has = std::any_of(matchings.begin(), matchings.end(),
                                         [&](std::uint32_t c) { return (mask & c) == c; });
            if (!has) ++wo[delta];
        }
    });

    s.total.assign(max_deg + 1, 0);
    s.without_matching.assign(max_deg + 1, 0);
    for (std::uint64_t b = 0; b < blocks; ++b)
        for (std::size_t k = 0; k <= max_deg; ++k) {
            s.total[k] += totals[b][k];
            s.without_matching[k] += withouts[b][k];
        }
    for (std::size_t k = 0; k <= max_deg; ++k) {
        if (s.without_matching[k] == 0) continue;
        if (!s.min_delta_without) s.min_delta_without = k;
        s.max_delta_without = k;
    }
    s.empirical_threshold = s.max_delta_without ? *s.max_delta_without + 1 : 0;
    return s;
}

json thresholds_json(const ThresholdSweep& s) {
    json hist = json::array();
    for (std::size_t k = 0; k < s.total.size(); ++k) {
        if (s.total[k] == 0) continue;
        hist.push_back({{"delta1", k}, {"instances", s.total[k]}, {"without_matching", s.without_matching[k]}});
    }
    auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
    return {{"schema", "hypermatch.verify.thresholds/1"},
            {"n", s.n},
            {"d", s.d},
            {"triples", s.triples},
            {"instances", s.instances},
            {"threshold_formula", opt(s.formula)},
            {"min_delta1_without_matching", opt(s.min_delta_without)},
            {"max_delta1_without_matching", opt(s.max_delta_without)},
            {"empirical_threshold", s.empirical_threshold},
            {"histogram", hist}};
}

InequalityScan scan_threshold_inequality(std::size_t n_min, std::size_t n_max) {
    InequalityScan s;
    s.n_min = n_min;
    s.n_max = n_max;
    for (std::size_t un = n_min; un <= n_max; ++un) {
        const auto n = static_cast<std::int64_t>(un);
        std::int64_t prev = 0;
        for (std::int64_t d = 1; 3 * d <= n; ++d) {
            ++s.checked;
            const std::int64_t t = threshold(n, d);
            const std::int64_t q = 2 * d * n - d * d;  // (1 - (1 - d/n)^2) n^2
            if (2 * n * t < (n - 3) * q) {
                ++s.bound_failures;
                if (!s.first_failure) s.first_failure = std::pair{un, static_cast<std::size_t>(d)};
            }
            if (d > 1 && t <= prev) ++s.monotone_failures;
            prev = t;
            const double eps = 1.0 - 2.0 * static_cast<double>(t) / static_cast<double>(q);
            s.max_eps_times_n = std::max(s.max_eps_times_n, eps * static_cast<double>(n));
        }
    }
    return s;
}

json inequality_json(const InequalityScan& s) {
    json first = nullptr;
    if (s.first_failure) first = {{"n", s.first_failure->first}, {"d", s.first_failure->second}};
    return {{"schema", "hypermatch.verify.inequality/1"},
            {"n_min", s.n_min},
            {"n_max", s.n_max},
            {"checked", s.checked},
            {"bound_failures", s.bound_failures},
            {"monotone_failures", s.monotone_failures},
            {"first_failure", first},
            {"max_eps_times_n", s.max_eps_times_n},
            {"ok", s.ok()}};
}

std::vector<SweepRow> run_sweep(const SweepParams& params) {
    if (params.d < 1 || 3 * params.d > params.n) throw std::invalid_argument("sweep needs 1 <= d <= n/3");
    const std::size_t count = params.trials * params.p_grid.size();
    std::vector<SweepRow> rows(count);
    const auto thr = threshold(static_cast<std::int64_t>(params.n), static_cast<std::int64_t>(params.d));
    parallel_for(count, params.threads, [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.n = params.n;
        row.d = params.d;
        row.p = params.p_grid[i / params.trials];
        row.seed = params.seed + i % params.trials;
        row.threshold = thr;
        const auto h = random_hypergraph(params.n, row.p, row.seed);
        row.delta1 = min_degree(h, 1);
        SolveBudget budget;
        budget.node_limit = params.budget_nodes;
        const auto oracle = max_matching(h, budget);
        row.oracle_size = oracle.matching.size();
        row.oracle_optimal = oracle.optimal;
        AugmentConfig cfg;
        cfg.k_max = params.k_max;
        cfg.seed = row.seed;
        const auto aug = augment_solve(h, params.n / 3, cfg);
        row.augment_size = aug.report.matching.size();
        row.agree = row.oracle_optimal && row.oracle_size == row.augment_size;
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepHeader;
    out += '\n';
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6g", r.p);
        out += std::to_string(r.n) + ',' + std::to_string(r.d) + ',' + buf + ',' + std::to_string(r.seed) + ',' +
               std::to_string(r.delta1) + ',' + std::to_string(r.threshold) + ',' + std::to_string(r.oracle_size) +
               ',' + std::to_string(r.augment_size) + ',' + (r.agree ? "true" : "false") + '\n';
    }
    return out;
}

}  // namespace hypermatch::tools
