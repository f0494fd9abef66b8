#include "hypermatch/exact_solver.hpp"

#include <stdexcept>
#include <vector>

namespace hypermatch {

void SolveBudget::validate() const {
    if (node_limit == 0) throw std::invalid_argument("node limit must be positive");
    if (time_limit && time_limit->count() <= 0) throw std::invalid_argument("time limit must be positive");
}

namespace {

class Search {
public:
    Search(const Hypergraph3& h, const SolveBudget& budget)
        : h_(h), budget_(budget), start_(std::chrono::steady_clock::now()) {
        masks_.reserve(h.num_edges());
        for (const Edge& e : h.edges()) masks_.push_back(e.mask().bits());
    }

    SolveReport run(VertexSet alive) {
        alive &= h_.vertices();
        root_bound_ = bound(alive);
        explore(alive);
        SolveReport r;
        for (std::uint32_t i : best_) r.matching.add(h_.edges()[i]);
        r.nodes = nodes_;
        r.budget_exhausted = exhausted_;
        r.target_met = budget_.target && best_.size() >= *budget_.target;
        r.optimal = (!exhausted_ && !stopped_) || best_.size() >= root_bound_;
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return r;
    }

private:
    bool live(std::uint32_t edge, VertexSet alive) const { return (masks_[edge] & ~alive.bits()) == 0; }

    std::size_t live_degree(Vertex v, VertexSet alive) const {
        std::size_t d = 0;
        for (std::uint32_t i : h_.incident(v)) d += live(i, alive);
        return d;
    }

    /// Vertices with a live edge.
    VertexSet coverable(VertexSet alive) const {
        VertexSet out;
        alive.for_each([&](Vertex v) {
            for (std::uint32_t i : h_.incident(v)) {
                if (live(i, alive)) {
                    out.insert(v);
                    return;
                }
            }
        });
        return out;
    }

    /// Size of a greedy vertex cover of the live edges.
    std::size_t cover_bound(VertexSet alive) const {
        std::size_t cover = 0;
        while (true) {
            Vertex pick = 0;
            std::size_t top = 0;
            alive.for_each([&](Vertex v) {
                const std::size_t d = live_degree(v, alive);
                if (d > top) {
                    top = d;
                    pick = v;
                }
            });
            if (top == 0) return cover;
            alive.erase(pick);
            ++cover;
        }
    }

    std::size_t bound(VertexSet alive) const {
        const std::size_t trivial = coverable(alive).size() / 3;
        return std::min(trivial, cover_bound(alive));
    }

    bool out_of_budget() {
        if (nodes_ >= budget_.node_limit) return true;
        if (budget_.time_limit && (nodes_ & 1023U) == 0 &&
            std::chrono::steady_clock::now() - start_ >= *budget_.time_limit) {
            return true;
        }
        return false;
    }

    void explore(VertexSet alive) {
        if (stopped_) return;
        if (out_of_budget()) {
            exhausted_ = stopped_ = true;
            return;
        }
        ++nodes_;
        alive = coverable(alive);
        if (current_.size() > best_.size()) best_ = current_;
        if (budget_.target && best_.size() >= *budget_.target) {
            stopped_ = true;
            return;
        }
        if (alive.empty()) return;
        if (current_.size() + alive.size() / 3 <= best_.size()) return;
        if (current_.size() + cover_bound(alive) <= best_.size()) return;

        Vertex pivot = 0;
        std::size_t fewest = SIZE_MAX;
        alive.for_each([&](Vertex v) {
            const std::size_t d = live_degree(v, alive);
            if (d < fewest) {
                fewest = d;
                pivot = v;
            }
        });
        for (std::uint32_t i : h_.incident(pivot)) {
            if (!live(i, alive)) continue;
            current_.push_back(i);
            explore(alive - VertexSet(masks_[i]));
            current_.pop_back();
            if (stopped_) return;
        }
        VertexSet without = alive;
        without.erase(pivot);
        explore(without);
    }

    const Hypergraph3& h_;
    SolveBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint32_t> current_;
    std::vector<std::uint32_t> best_;
    std::size_t root_bound_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool stopped_ = false;
};

}  // namespace

SolveReport max_matching(const Hypergraph3& h, const SolveBudget& budget) {
    return max_matching_in_subset(h, h.vertices(), budget);
}

SolveReport max_matching_in_subset(const Hypergraph3& h, VertexSet subset, const SolveBudget& budget) {
    budget.validate();
    return Search(h, budget).run(subset);
}

DecisionResult has_d_matching(const Hypergraph3& h, std::size_t d, SolveBudget budget) {
    DecisionResult r;
    if (d == 0) {
        r.decision = Decision::Yes;
        r.report.optimal = false;
        r.report.target_met = true;
        return r;
    }
    budget.target = d;
    r.report = max_matching(h, budget);
    if (r.report.matching.size() >= d) {
        r.decision = Decision::Yes;
        std::vector<Edge> first(r.report.matching.edges().begin(), r.report.matching.edges().begin() + d);
        r.certificate = Matching(std::move(first));
    } else if (r.report.optimal) {
        r.decision = Decision::No;
    }
    return r;
}

}  // namespace hypermatch
