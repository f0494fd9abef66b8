#include "hypermatch/constructions.hpp"

#include <stdexcept>
#include <vector>

#include "hypermatch/random.hpp"

namespace hypermatch {

namespace {

template <typename Keep>
std::vector<Edge> all_triples(std::size_t n, Keep keep) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) {
                Edge e(a, b, c);
                if (keep(e)) edges.push_back(e);
            }
    return edges;
}

Hypergraph3 meeting(std::size_t n, VertexSet w) {
    return Hypergraph3::from_edges(n, all_triples(n, [&](const Edge& e) { return e.mask().intersects(w); }));
}

}  // namespace

Instance extremal_star(std::size_t n) {
    if (n < 6 || n % 3 != 0) throw std::invalid_argument("extremal_star needs n >= 6 divisible by 3");
    if (n > kMaxVertices) throw std::invalid_argument("n exceeds 64");
    Partition p = Partition::suffix(n, n / 3 - 1, n / 3);
    return {meeting(n, p.w), p};
}

Instance h_n_d(std::size_t n, std::size_t d, std::optional<VertexSet> w) {
    if (n > kMaxVertices) throw std::invalid_argument("n exceeds 64");
    if (3 * d > n) throw std::invalid_argument("h_n_d needs d <= n/3");
    Partition p = Partition::suffix(n, d);
    if (w) {
        if (w->size() != d || !w->subset_of(VertexSet::range(n))) {
            throw std::invalid_argument("W must hold exactly d vertices of 0..n-1");
        }
        p.w = *w;
    }
    auto keep = [&](const Edge& e) {
        const auto t = edge_type(e, p);
        return t == EdgeType::VVW || t == EdgeType::VWW;
    };
    return {Hypergraph3::from_edges(n, all_triples(n, keep)), p};
}

Instance bde_extremal(std::size_t n, std::size_t d) {
    if (d < 1 || 3 * d > n) throw std::invalid_argument("bde_extremal needs 1 <= d <= n/3");
    if (n > kMaxVertices) throw std::invalid_argument("n exceeds 64");
    Partition p = Partition::suffix(n, d - 1, d);
    return {meeting(n, p.w), p};
}

Hypergraph3 random_hypergraph(std::size_t n, double p, std::uint64_t seed) {
    if (n > kMaxVertices) throw std::invalid_argument("n exceeds 64");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    std::uint64_t rank = 0;
    return Hypergraph3::from_edges(n, all_triples(n, [&](const Edge&) { return unit_at(seed, rank++) < p; }));
}

Hypergraph3 perturb_remove(const Hypergraph3& h, std::size_t k, std::uint64_t seed) {
    if (k > h.num_edges()) throw std::invalid_argument("cannot remove more edges than present");
    CounterRng rng(seed);
    std::vector<bool> drop(h.num_edges(), false);
    for (std::size_t i : rng.sample(h.num_edges(), k)) drop[i] = true;
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < h.num_edges(); ++i)
        if (!drop[i]) kept.push_back(h.edges()[i]);
    return Hypergraph3::from_edges(h.n(), std::move(kept));
}

std::size_t padding_count(std::size_t n, std::size_t d) {
    if (3 * d > n) throw std::invalid_argument("padding needs d <= n/3");
    return (n - 3 * d) / 2;
}

Hypergraph3 pad_to_perfect(const Hypergraph3& h, std::size_t d) {
    const std::size_t n = h.n();
    const std::size_t total = n + padding_count(n, d);
    if (total > kMaxVertices) throw std::invalid_argument("padded order exceeds 64");
    const VertexSet added = VertexSet::range(total) - VertexSet::range(n);
    std::vector<Edge> edges = h.edges();
    for (Edge e : all_triples(total, [&](const Edge& t) { return t.mask().intersects(added); })) {
        edges.push_back(e);
    }
    return Hypergraph3::from_edges(total, std::move(edges));
}

}  // namespace hypermatch
