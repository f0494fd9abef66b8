#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypermatch/exact_solver.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// |E(H_{n,d}(V,W))| for class sizes |V| = a, |W| = b.
std::size_t hnd_edge_count(std::size_t a, std::size_t b);

/// Number of H_{n,d}(V,W) edges missing from H.
std::size_t deficiency(const Hypergraph3& h, const Partition& p);

struct ClosenessReport {
    Partition partition;
    std::size_t deficiency = 0;
    /// deficiency / n^3
    double epsilon = 0.0;
    double alpha = 0.0;
    /// A vertex is bad when its badness exceeds alpha * n^2.
    double bad_threshold = 0.0;
    /// |N_{H_{n,d}}(v) \ N_H(v)| per vertex.
    std::vector<std::size_t> badness;
    VertexSet bad_v;
    VertexSet bad_w;

    bool all_good() const { return bad_v.empty() && bad_w.empty(); }
};

ClosenessReport classify_goodness(const Hypergraph3& h, const Partition& p, double alpha);

enum class PartitionSearch {
    /// Every W of size d; refused when C(n,d) exceeds kExhaustivePartitionCap.
    Exhaustive,
    /// W seeded with the d highest-degree vertices, then best-improvement swaps.
    Local,
    /// W seeded with per-edge bottom vertices read off B113 link patterns of a
    /// greedy matching, then the same swaps. Heuristic; no finite-n guarantee.
    Bottom,
};

inline constexpr std::uint64_t kExhaustivePartitionCap = 1'000'000;

ClosenessReport find_partition(const Hypergraph3& h, std::size_t d, PartitionSearch mode, double alpha = 0.05);

/// For each matching edge E, the vertex of E that most often plays the base
/// vertex of a B113 link L_v(EF), over uncovered v and other matching edges F.
/// Edges never seen in a B113 link contribute nothing.
std::vector<Vertex> bottom_vertices(const Hypergraph3& h, const Matching& m);

struct GoodCaseResult {
    Matching matching;
    bool success = false;
    /// Every vertex was alpha-good on entry.
    bool all_good = false;
    std::size_t direct_edges = 0;
    std::size_t swaps = 0;
    std::string stall_reason;
};

/// Builds a matching of VVW edges: adds VVW edges on uncovered vertices and,
/// when none remain, replaces a pair e1 e2 of matching edges that is good for
/// some uncovered v1 v2 w by three VVW edges on those nine vertices.
GoodCaseResult good_case_matching(const Hypergraph3& h, const Partition& p, std::size_t d, double alpha = 0.05);

struct StageConfig {
    double alpha = 0.05;
    /// A bad vertex is useful when it has >= useful_theta * n^2 link pairs in V2 x W1.
    double useful_theta = 0.01;
    SolveBudget m1_budget{};
};

struct StageLog {
    VertexSet bad_v;
    VertexSet bad_w;
    std::size_t c = 0;
    std::size_t m2 = 0;
    std::size_t m3 = 0;
    /// delta_1(H[V1]) against C(a-1,2) - C(a-c,2), a = |V1|; only meaningful when c > 0.
    std::int64_t m1_min_degree = 0;
    std::int64_t m1_degree_bound = 0;
    bool m1_degree_condition = true;
    /// Bad vertices of the residual after M1.
    VertexSet bad_after_m1;
    VertexSet useful;
    std::vector<Matching> stages;  // M1..M5, in order, present up to the failing stage
    std::string failed_stage;
    std::string obligation;
};

struct StagedResult {
    bool success = false;
    Matching matching;
    StageLog log;
};

StagedResult staged_matching(const Hypergraph3& h, const Partition& p, std::size_t d, const StageConfig& cfg = {});

}  // namespace hypermatch
