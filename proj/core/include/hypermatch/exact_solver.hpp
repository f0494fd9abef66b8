#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct SolveBudget {
    std::uint64_t node_limit = 10'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
    /// Stop as soon as a matching of this size is found.
    std::optional<std::size_t> target;

    void validate() const;
};

struct SolveReport {
    Matching matching;
    /// The search proved no larger matching exists.
    bool optimal = false;
    /// A target was set and reached.
    bool target_met = false;
    /// Node or time limit cut the search short.
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
    double wall_ms = 0.0;
};

/// Branch and bound: branch on the lowest-index live vertex of minimum
/// remaining degree, trying each live edge through it in lexicographic order
/// and then leaving it unmatched. Vertices of zero remaining degree are
/// dropped; the bound is min(live/3, greedy vertex cover).
SolveReport max_matching(const Hypergraph3& h, const SolveBudget& budget = {});

/// Same search restricted to the sub-hypergraph induced on `subset`.
SolveReport max_matching_in_subset(const Hypergraph3& h, VertexSet subset, const SolveBudget& budget = {});

enum class Decision { Yes, No, Unknown };

struct DecisionResult {
    Decision decision = Decision::Unknown;
    Matching certificate;  // d edges when decision is Yes
    SolveReport report;
};

DecisionResult has_d_matching(const Hypergraph3& h, std::size_t d, SolveBudget budget = {});

}  // namespace hypermatch
