#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hypermatch::tools {

struct TightnessRow {
    std::size_t n = 0;
    std::size_t delta1 = 0;
    std::int64_t expected_delta1 = 0;
    std::size_t max_matching = 0;
    bool optimal = false;
    std::uint64_t nodes = 0;
    bool ok = false;
};

struct TightnessReport {
    std::vector<TightnessRow> rows;
    bool ok = true;
};

/// extremal_star(n) for n = 6, 9, ..., n_max: minimum degree against the
/// closed form and a certified maximum matching of n/3 - 1.
TightnessReport verify_tightness(std::size_t n_max);
nlohmann::json tightness_json(const TightnessReport& r);

struct ThresholdSweep {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t triples = 0;
    std::uint64_t instances = 0;
    std::optional<std::int64_t> formula;
    /// Indexed by minimum vertex degree.
    std::vector<std::uint64_t> total;
    std::vector<std::uint64_t> without_matching;
    std::optional<std::size_t> min_delta_without;
    std::optional<std::size_t> max_delta_without;
    /// Smallest delta such that every instance with delta_1 >= delta has a d-matching.
    std::size_t empirical_threshold = 0;
};

inline constexpr std::size_t kThresholdSweepMaxN = 6;

/// Every 3-uniform hypergraph on n <= 6 labeled vertices, tallied by minimum
/// degree and whether it has d disjoint edges.
ThresholdSweep run_threshold_sweep(std::size_t n, std::size_t d, std::size_t threads);
nlohmann::json thresholds_json(const ThresholdSweep& s);

struct InequalityScan {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::uint64_t checked = 0;
    std::uint64_t bound_failures = 0;
    std::uint64_t monotone_failures = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;
    /// Largest eps*n over the range, where eps is the smallest value making
    /// threshold(n,d) >= (1 - eps)(1 - (1 - d/n)^2) n^2 / 2 hold.
    double max_eps_times_n = 0.0;
    bool ok() const { return bound_failures == 0 && monotone_failures == 0; }
};

/// threshold(n,d) against (1 - 3/n)(1 - (1 - d/n)^2) n^2 / 2, compared as
/// 2n * threshold >= (n - 3)(2dn - d^2), and strict growth in d.
InequalityScan scan_threshold_inequality(std::size_t n_min, std::size_t n_max);
nlohmann::json inequality_json(const InequalityScan& s);

struct SweepParams {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t trials = 0;
    std::vector<double> p_grid;
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = 10'000'000;
    std::size_t k_max = 5;
    std::size_t threads = 1;
};

struct SweepRow {
    std::size_t n = 0;
    std::size_t d = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::size_t delta1 = 0;
    std::int64_t threshold = 0;
    std::size_t oracle_size = 0;
    std::size_t augment_size = 0;
    bool oracle_optimal = false;
    bool agree = false;
};

inline constexpr const char* kSweepHeader =
    "n,d,p,seed,delta1,threshold,oracle_size,augment_size,agree";

/// Trial t of probability p uses instance seed = seed + t; rows are ordered
/// by p, then trial.
std::vector<SweepRow> run_sweep(const SweepParams& params);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace hypermatch::tools
