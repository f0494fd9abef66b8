#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace hypermatch {

using Vertex = std::uint32_t;

/// Largest supported vertex count; vertex sets are single machine words.
inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertices drawn from 0..63, stored as one 64-bit word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet from(std::span<const Vertex> vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }
    /// {0, ..., n-1}
    static constexpr VertexSet range(std::size_t n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }

    void insert(Vertex v) {
        if (v >= 64) throw std::out_of_range("vertex index exceeds 63");
        bits_ |= std::uint64_t{1} << v;
    }
    constexpr void erase(Vertex v) {
        if (v < 64) bits_ &= ~(std::uint64_t{1} << v);
    }
    /// Lowest vertex; the set must be nonempty.
    constexpr Vertex front() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

    std::vector<Vertex> to_vector() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
    }

    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// An unordered triple, always stored sorted ascending.
class Edge {
public:
    constexpr Edge() = default;
    /// Throws std::invalid_argument on a repeated vertex.
    Edge(Vertex a, Vertex b, Vertex c);

    constexpr Vertex operator[](std::size_t i) const { return v_[i]; }
    constexpr const std::array<Vertex, 3>& vertices() const { return v_; }
    VertexSet mask() const { return VertexSet{v_[0], v_[1], v_[2]}; }
    constexpr bool contains(Vertex x) const { return v_[0] == x || v_[1] == x || v_[2] == x; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

private:
    std::array<Vertex, 3> v_{0, 0, 0};
};

enum class EdgeType { VVV, VVW, VWW, WWW };
std::string_view to_string(EdgeType t);

/// Vertex classes (V, W) of a vertex range plus the target matching size d.
struct Partition {
    std::size_t n = 0;
    VertexSet w;
    std::size_t d = 0;

    /// W = the last |w_size| indices; d defaults to w_size.
    static Partition suffix(std::size_t n, std::size_t w_size);
    static Partition suffix(std::size_t n, std::size_t w_size, std::size_t d);

    VertexSet v() const { return VertexSet::range(n) - w; }
    bool in_w(Vertex x) const { return w.contains(x); }
    /// Throws if W reaches outside 0..n-1.
    void validate() const;
};

EdgeType edge_type(const Edge& e, const Partition& p);

/// Immutable 3-uniform hypergraph on vertices 0..n-1.
class Hypergraph3 {
public:
    Hypergraph3() = default;
    /// Validates, sorts and deduplicates. Throws std::invalid_argument on a
    /// repeated vertex, an out-of-range index, or n > 64.
    static Hypergraph3 build(std::size_t n, std::span<const std::array<Vertex, 3>> triples);
    static Hypergraph3 build(std::size_t n, std::initializer_list<std::array<Vertex, 3>> triples);
    static Hypergraph3 from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    /// Lexicographically sorted, no duplicates.
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool has_edge(Vertex a, Vertex b, Vertex c) const;
    bool has_edge(const Edge& e) const { return has_edge(e[0], e[1], e[2]); }
    /// All w with {u, v, w} an edge.
    VertexSet pair_link(Vertex u, Vertex v) const;
    /// Indices into edges() of the edges containing v, ascending.
    const std::vector<std::uint32_t>& incident(Vertex v) const;

    std::size_t degree(Vertex v) const;
    std::size_t codegree(Vertex u, Vertex v) const;

private:
    void index();
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> pair_link_;  // n*n words
    std::vector<std::vector<std::uint32_t>> incident_;
};

/// Minimum vertex degree (ell = 1) or minimum codegree (ell = 2).
/// Throws std::domain_error when there is no vertex (ell = 1) or pair (ell = 2).
std::size_t min_degree(const Hypergraph3& h, int ell);

struct DegreeProfile {
    std::vector<std::size_t> degrees;
    std::vector<std::vector<std::size_t>> codegrees;  // symmetric, zero diagonal
    std::size_t delta1 = 0;
    std::size_t delta2 = 0;
};
DegreeProfile degree_profile(const Hypergraph3& h);

/// Exact C(n-1,2) - C(n-d,2), the degree bound above which a d-matching is forced.
/// Requires 1 <= d and 3d <= n.
std::int64_t threshold(std::int64_t n, std::int64_t d);
std::int64_t binom2(std::int64_t x);
std::int64_t binom3(std::int64_t x);

struct InducedHypergraph {
    Hypergraph3 graph;
    std::vector<Vertex> original;  // new index -> original index
};
/// Deletes the vertices in `removed` together with every edge meeting them,
/// then relabels the survivors contiguously in increasing order.
InducedHypergraph remove_vertices(const Hypergraph3& h, VertexSet removed);

/// Vertex-disjoint edges of a host hypergraph.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    VertexSet covered() const { return covered_; }
    VertexSet uncovered(const Hypergraph3& host) const { return host.vertices() - covered_; }

    /// Throws std::invalid_argument if e meets a covered vertex.
    void add(const Edge& e);
    void remove(const Edge& e);

    /// True iff edges are pairwise disjoint and all present in host.
    bool valid_in(const Hypergraph3& host) const;

private:
    std::vector<Edge> edges_;
    VertexSet covered_;
};

}  // namespace hypermatch
