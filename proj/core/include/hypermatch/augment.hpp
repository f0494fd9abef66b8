#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypermatch/exact_solver.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct AugmentConfig {
    /// Largest number of matching edges a move may remove.
    std::size_t k_max = 5;
    /// A move on k edges looks at |U'| = min(|V0|, max(3, k + slack)) uncovered
    /// vertices; slack 0..3 gives the range 3..k+3.
    std::size_t uncovered_slack = 3;
    /// Subsets S of the matching probed per k; all are tried when fewer exist.
    std::size_t subset_cap = 200;
    /// Uncovered subsets U' probed per (k, S); all are tried when fewer exist.
    std::size_t uncovered_cap = 200;
    std::uint64_t seed = 0;
    std::size_t iteration_limit = 10'000;
    /// Budget for each (k+1)-matching subproblem on V(S) + U'.
    std::uint64_t subproblem_nodes = 200'000;

    void validate() const;
};

/// Replace `removed` (k edges of the matching) by `added` (k + 1 edges).
struct Move {
    std::vector<Edge> removed;
    std::vector<Edge> added;
    /// Previously uncovered vertices the move covers.
    VertexSet consumed;
};

struct MoveTrace {
    Matching initial;
    std::vector<Move> moves;

    /// Re-applies every move to `initial`; throws if a move does not fit.
    Matching replay() const;
};

Matching apply_move(const Matching& m, const Move& move);

/// Maximal matching built by scanning edges in lexicographic order (seed 0)
/// or in an order shuffled by CounterRng(seed).
Matching greedy_matching(const Hypergraph3& h, std::uint64_t seed = 0);

struct AugmentStep {
    Matching matching;
    Move move;
};

/// Tries k = 0 (an edge inside V0), then k = 1..k_max: for each probed S and
/// U', asks the exact solver for a (k+1)-matching inside V(S) + U'. Returns
/// the first move found in that order.
std::optional<AugmentStep> augment_once(const Hypergraph3& h, const Matching& m, const AugmentConfig& cfg = {});

struct AugmentResult {
    SolveReport report;
    MoveTrace trace;
    bool stalled = false;
    std::size_t iterations = 0;
};

/// Greedy start, then augment_once until the matching reaches size d,
/// no move is found (stall) or the iteration limit is hit.
AugmentResult augment_solve(const Hypergraph3& h, std::size_t d, const AugmentConfig& cfg = {});

}  // namespace hypermatch
