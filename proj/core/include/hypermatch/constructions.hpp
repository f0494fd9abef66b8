#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct Instance {
    Hypergraph3 graph;
    Partition partition;
};

/// All triples meeting W, where W is the last n/3 - 1 vertices.
/// Requires n >= 6 and 3 | n; the partition's d is n/3.
Instance extremal_star(std::size_t n);

/// H_{n,d}(V,W): every triple of type VVW or VWW. W defaults to the last d
/// vertices; an explicit W must have exactly d elements.
Instance h_n_d(std::size_t n, std::size_t d, std::optional<VertexSet> w = std::nullopt);

/// All triples meeting a W of size d - 1 (the last d - 1 vertices); the
/// partition's d is the requested d. Requires 1 <= d <= n/3.
Instance bde_extremal(std::size_t n, std::size_t d);

/// Each of the C(n,3) triples, ranked lexicographically as t = 0, 1, ...,
/// is kept iff unit_at(seed, t) < p.
Hypergraph3 random_hypergraph(std::size_t n, double p, std::uint64_t seed);

/// Removes k distinct edges chosen uniformly with CounterRng(seed).
Hypergraph3 perturb_remove(const Hypergraph3& h, std::size_t k, std::uint64_t seed);

/// Number of vertices pad_to_perfect appends: floor((n - 3d) / 2).
std::size_t padding_count(std::size_t n, std::size_t d);

/// Appends padding_count(n, d) vertices, each forming an edge with every
/// pair of other vertices (old or new).
Hypergraph3 pad_to_perfect(const Hypergraph3& h, std::size_t d);

}  // namespace hypermatch
