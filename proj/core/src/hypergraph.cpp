#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace hypermatch {

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Edge::Edge(Vertex a, Vertex b, Vertex c) : v_{a, b, c} {
    std::sort(v_.begin(), v_.end());
    if (v_[0] == v_[1] || v_[1] == v_[2]) {
        throw std::invalid_argument("edge has a repeated vertex");
    }
}

std::string_view to_string(EdgeType t) {
    switch (t) {
        case EdgeType::VVV: return "VVV";
        case EdgeType::VVW: return "VVW";
        case EdgeType::VWW: return "VWW";
        case EdgeType::WWW: return "WWW";
    }
    return "?";
}

Partition Partition::suffix(std::size_t n, std::size_t w_size) { return suffix(n, w_size, w_size); }

Partition Partition::suffix(std::size_t n, std::size_t w_size, std::size_t d) {
    if (w_size > n || n > kMaxVertices) throw std::invalid_argument("partition class larger than vertex range");
    Partition p;
    p.n = n;
    p.w = VertexSet::range(n) - VertexSet::range(n - w_size);
    p.d = d;
    return p;
}

void Partition::validate() const {
    if (n > kMaxVertices) throw std::invalid_argument("partition over more than 64 vertices");
    if (!w.subset_of(VertexSet::range(n))) throw std::invalid_argument("W contains a vertex outside 0..n-1");
}

EdgeType edge_type(const Edge& e, const Partition& p) {
    switch ((e.mask() & p.w).size()) {
        case 0: return EdgeType::VVV;
        case 1: return EdgeType::VVW;
        case 2: return EdgeType::VWW;
        default: return EdgeType::WWW;
    }
}

Hypergraph3 Hypergraph3::build(std::size_t n, std::span<const std::array<Vertex, 3>> triples) {
    if (n > kMaxVertices) throw std::invalid_argument("hypergraphs are limited to 64 vertices");
    std::vector<Edge> edges;
    edges.reserve(triples.size());
    for (const auto& t : triples) {
        for (Vertex v : t) {
            if (v >= n) throw std::invalid_argument("edge vertex " + std::to_string(v) + " out of range");
        }
        edges.emplace_back(t[0], t[1], t[2]);
    }
    return from_edges(n, std::move(edges));
}

Hypergraph3 Hypergraph3::build(std::size_t n, std::initializer_list<std::array<Vertex, 3>> triples) {
    return build(n, std::span<const std::array<Vertex, 3>>(triples.begin(), triples.size()));
}

Hypergraph3 Hypergraph3::from_edges(std::size_t n, std::vector<Edge> edges) {
    if (n > kMaxVertices) throw std::invalid_argument("hypergraphs are limited to 64 vertices");
    for (const Edge& e : edges) {
        if (e[2] >= n) throw std::invalid_argument("edge vertex " + std::to_string(e[2]) + " out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Hypergraph3 h;
    h.n_ = n;
    h.edges_ = std::move(edges);
    h.index();
    return h;
}

void Hypergraph3::index() {
    pair_link_.assign(n_ * n_, 0);
    incident_.assign(n_, {});
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        const Vertex a = e[0], b = e[1], c = e[2];
        auto link = [&](Vertex x, Vertex y, Vertex z) {
            pair_link_[x * n_ + y] |= std::uint64_t{1} << z;
            pair_link_[y * n_ + x] |= std::uint64_t{1} << z;
        };
        link(a, b, c);
        link(a, c, b);
        link(b, c, a);
        incident_[a].push_back(i);
        incident_[b].push_back(i);
        incident_[c].push_back(i);
    }
}

void Hypergraph3::check_vertex(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Hypergraph3::has_edge(Vertex a, Vertex b, Vertex c) const {
    if (a >= n_ || b >= n_ || c >= n_ || a == b) return false;
    return VertexSet(pair_link_[a * n_ + b]).contains(c);
}

VertexSet Hypergraph3::pair_link(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return VertexSet(pair_link_[u * n_ + v]);
}

const std::vector<std::uint32_t>& Hypergraph3::incident(Vertex v) const {
    check_vertex(v);
    return incident_[v];
}

std::size_t Hypergraph3::degree(Vertex v) const { return incident(v).size(); }

std::size_t Hypergraph3::codegree(Vertex u, Vertex v) const {
    if (u == v) throw std::invalid_argument("codegree needs two distinct vertices");
    return pair_link(u, v).size();
}

std::size_t min_degree(const Hypergraph3& h, int ell) {
    const std::size_t n = h.n();
    if (ell == 1) {
        if (n == 0) throw std::domain_error("minimum degree of a hypergraph without vertices");
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (Vertex v = 0; v < n; ++v) best = std::min(best, h.degree(v));
        return best;
    }
    if (ell == 2) {
        if (n < 2) throw std::domain_error("minimum codegree needs at least two vertices");
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) best = std::min(best, h.codegree(u, v));
        return best;
    }
    throw std::invalid_argument("ell must be 1 or 2 for 3-uniform hypergraphs");
}

DegreeProfile degree_profile(const Hypergraph3& h) {
    DegreeProfile p;
    const std::size_t n = h.n();
    p.degrees.resize(n);
    p.codegrees.assign(n, std::vector<std::size_t>(n, 0));
    for (Vertex v = 0; v < n; ++v) p.degrees[v] = h.degree(v);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) p.codegrees[u][v] = p.codegrees[v][u] = h.codegree(u, v);
    if (n >= 1) p.delta1 = min_degree(h, 1);
    if (n >= 2) p.delta2 = min_degree(h, 2);
    return p;
}

std::int64_t binom2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }
std::int64_t binom3(std::int64_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

std::int64_t threshold(std::int64_t n, std::int64_t d) {
    if (d < 1 || 3 * d > n) throw std::invalid_argument("threshold requires 1 <= d <= n/3");
    return binom2(n - 1) - binom2(n - d);
}

InducedHypergraph remove_vertices(const Hypergraph3& h, VertexSet removed) {
    InducedHypergraph out;
    std::vector<Vertex> relabel(h.n(), 0);
    for (Vertex v = 0; v < h.n(); ++v) {
        if (removed.contains(v)) continue;
        relabel[v] = static_cast<Vertex>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<Edge> kept;
    for (const Edge& e : h.edges()) {
        if (e.mask().intersects(removed)) continue;
        kept.emplace_back(relabel[e[0]], relabel[e[1]], relabel[e[2]]);
    }
    out.graph = Hypergraph3::from_edges(out.original.size(), std::move(kept));
    return out;
}

Matching::Matching(std::vector<Edge> edges) {
    for (const Edge& e : edges) add(e);
}

void Matching::add(const Edge& e) {
    if (e.mask().intersects(covered_)) throw std::invalid_argument("edge overlaps the matching");
    edges_.push_back(e);
    covered_ |= e.mask();
}

void Matching::remove(const Edge& e) {
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it == edges_.end()) throw std::invalid_argument("edge not in matching");
    edges_.erase(it);
    covered_ -= e.mask();
}

bool Matching::valid_in(const Hypergraph3& host) const {
    VertexSet seen;
    for (const Edge& e : edges_) {
        if (!host.has_edge(e) || e.mask().intersects(seen)) return false;
        seen |= e.mask();
    }
    return seen == covered_ && covered_.size() == 3 * edges_.size();
}

}  // namespace hypermatch
