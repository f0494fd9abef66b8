#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypermatch/augment.hpp"
#include "hypermatch/exact_solver.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// True iff the six vertices e + t split into two edges of h.
/// t must hold three vertices disjoint from e.
bool absorbs(const Hypergraph3& h, const Edge& e, VertexSet t);

/// The two edges covering e + t, when absorbs(h, e, t).
std::optional<std::array<Edge, 2>> absorbing_pair(const Hypergraph3& h, const Edge& e, VertexSet t);

struct AbsorbConfig {
    double gamma = 0.25;
    /// Absorbers every target triple needs.
    std::size_t redundancy = 1;
    std::uint64_t seed = 0;
    /// Cap |M*| at floor(gamma^3 n / 3) and capacity at gamma^6 n.
    bool contract = false;
    /// Overrides the size cap (default floor(n/6) without contract).
    std::optional<std::size_t> max_size;
    /// Residual sizes up to this are verified over every triple; larger ones are sampled.
    std::size_t exhaustive_limit = 12;
    std::size_t sample_triples = 10'000;
};

struct AbsorbingMatching {
    Matching matching;
    double gamma = 0.0;
    std::size_t redundancy = 0;
    /// Triples of the residual that were verified, and which matching edges absorb each.
    std::vector<VertexSet> triples;
    std::vector<std::vector<std::uint32_t>> absorbers;
    std::size_t min_absorbers = 0;
    bool success = false;
    /// Verification covered every triple of V(H) - V(M*) rather than a sample.
    bool exhaustive = false;
    /// delta_1(H) >= (1/2 + 2 gamma) C(n,2).
    bool hypothesis_holds = false;
    std::size_t size_cap = 0;
    /// Largest leftover (a multiple of 3) absorb_leftover accepts.
    std::size_t capacity = 0;
    bool contract = false;
};

/// Greedily adds disjoint edges, each absorbing the most triples that still
/// lack absorbers, until every target triple has `redundancy` absorbers or
/// the size cap is reached; then verifies coverage on the residual.
AbsorbingMatching find_absorbing(const Hypergraph3& h, const AbsorbConfig& cfg = {});

struct LeftoverResult {
    bool success = false;
    Matching matching;
    std::string reason;
    std::uint64_t nodes = 0;
};

/// Splits `leftover` into triples, assigns each to a distinct absorbing edge
/// (backtracking) and swaps each assigned edge for its covering pair. On
/// success the matching covers exactly V(M*) + leftover.
LeftoverResult absorb_leftover(const Hypergraph3& h, const AbsorbingMatching& a, VertexSet leftover,
                               std::uint64_t node_limit = 100'000);

struct PipelineConfig {
    AbsorbConfig absorb{};
    AugmentConfig augment{};
    std::uint64_t backtrack_nodes = 100'000;
};

struct PipelineReport {
    SolveReport report;
    AbsorbingMatching absorbing;
    std::size_t leftover = 0;
    bool success = false;
    /// "", "order", "augment" or "absorb".
    std::string failed_phase;
    std::string detail;
};

/// Absorbing matching M*, augmenting search on H - V(M*), then absorption of
/// the uncovered remainder.
PipelineReport perfect_via_absorbing(const Hypergraph3& h, const PipelineConfig& cfg = {});

}  // namespace hypermatch
