#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

/// Labeled bipartite graph between X = {x0,x1,x2} and Y = {y0,y1,y2}.
/// Bit 3*i + j is the pair (x_i, y_j).
class BipartitePattern {
public:
    constexpr BipartitePattern() = default;
    constexpr explicit BipartitePattern(std::uint16_t mask) : mask_(mask & 0x1FF) {}
    static BipartitePattern from_pairs(std::initializer_list<std::pair<int, int>> pairs);

    constexpr std::uint16_t mask() const { return mask_; }
    constexpr bool has(int i, int j) const { return ((mask_ >> (3 * i + j)) & 1U) != 0; }
    void set(int i, int j) { mask_ |= static_cast<std::uint16_t>(1U << (3 * i + j)); }
    int edge_count() const;
    int x_degree(int i) const;
    int y_degree(int j) const;

    BipartitePattern transpose() const;
    /// x_i -> x_{px[i]}, y_j -> y_{py[j]}
    BipartitePattern relabel(const std::array<int, 3>& px, const std::array<int, 3>& py) const;

    friend constexpr auto operator<=>(BipartitePattern, BipartitePattern) = default;

private:
    std::uint16_t mask_ = 0;
};

/// True iff some permutation s has (x_i, y_s(i)) present for all i.
bool has_perfect_matching(BipartitePattern p);

/// Smallest mask over the 36 side-preserving relabelings.
BipartitePattern canonical_form(BipartitePattern p);
/// Smallest mask over all 72 graph isomorphisms (relabelings and side swap).
BipartitePattern isomorphism_form(BipartitePattern p);

enum class PatternKind { HasPM, B033, B023, B113, Deficient };
std::string_view to_string(PatternKind k);

struct PatternClass {
    PatternKind kind = PatternKind::Deficient;
    /// B113 only: (i*, j*) with x_{i*} and y_{j*} both of degree 3.
    std::optional<std::pair<int, int>> base;
    /// B023/B033 only: true when the isolated vertex lies in X.
    bool isolated_in_x = false;

    friend bool operator==(const PatternClass&, const PatternClass&) = default;
};

PatternClass classify(BipartitePattern p);

/// Base edge of a B113 pattern; throws std::invalid_argument otherwise.
std::pair<int, int> base_edge(BipartitePattern p);

struct Fact1Report {
    std::size_t patterns = 0;
    std::size_t violations = 0;
    /// counts[kind][edge count]
    std::map<PatternKind, std::array<std::size_t, 10>> counts;
    /// PM-free patterns with 5 or 6 edges grouped by isomorphism_form: one
    /// entry per class with its labeled multiplicity and sorted degree
    /// sequence of the side holding the minimum-degree vertex.
    struct IsoClass {
        BipartitePattern representative;
        int edges = 0;
        std::size_t labeled = 0;
        std::array<int, 3> degrees{};
        PatternKind kind = PatternKind::Deficient;
    };
    std::vector<IsoClass> classes;
    bool base_edge_consistent = false;
};

/// Enumerates all 512 patterns and checks the perfect-matching classification.
Fact1Report verify_fact1();

/// Link graph of an apex vertex; every pair {a, b} has {apex, a, b} in H.
struct LinkGraph {
    Vertex apex = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;  // sorted, a < b within the pair except in bipartite form
    /// Set when built from two classes of size three.
    std::optional<BipartitePattern> pattern;

    std::size_t size() const { return edges.size(); }
    bool contains(Vertex a, Vertex b) const;
    /// The hypergraph edge {apex, a, b}.
    Edge edge_with(std::pair<Vertex, Vertex> pair) const { return Edge(apex, pair.first, pair.second); }
};

/// L_v(A,B). A and B must be disjoint and avoid v; pairs are (a, b) with a in A.
/// When |A| = |B| = 3 the pattern uses the given order of A and B.
LinkGraph link_bipartite(const Hypergraph3& h, Vertex v, std::span<const Vertex> a, std::span<const Vertex> b);
/// L_v(A): pairs inside A, v must not lie in A.
LinkGraph link_within(const Hypergraph3& h, Vertex v, std::span<const Vertex> a);
/// L_v(A1 A2 ... Ak) = union of L_v(Ai, Ai+1), 2 <= k <= 5, sets pairwise disjoint.
LinkGraph link_chain(const Hypergraph3& h, Vertex v, std::span<const std::vector<Vertex>> sets);

/// L_v(EF) for two matching edges, X = E and Y = F in sorted vertex order.
BipartitePattern link_pattern(const Hypergraph3& h, Vertex v, const Edge& e, const Edge& f);

}  // namespace hypermatch
