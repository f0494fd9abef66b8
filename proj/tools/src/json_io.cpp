#include "hypermatch_tools/json_io.hpp"

#include <stdexcept>

namespace hypermatch::tools {

json edge_json(const Edge& e) { return json::array({e[0], e[1], e[2]}); }

Edge edge_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("edge must be an array of three vertices");
    return Edge(j[0].get<Vertex>(), j[1].get<Vertex>(), j[2].get<Vertex>());
}

json matching_json(const Matching& m) {
    json out = json::array();
    for (const Edge& e : m.edges()) out.push_back(edge_json(e));
    return out;
}

Matching matching_from_json(const json& j) {
    Matching m;
    for (const auto& e : j) m.add(edge_from_json(e));
    return m;
}

json vertex_set_json(VertexSet s) { return json(s.to_vector()); }

VertexSet vertex_set_from_json(const json& j) {
    VertexSet s;
    for (const auto& v : j) s.insert(v.get<Vertex>());
    return s;
}

json partition_json(const Partition& p) {
    return {{"n", p.n}, {"d", p.d}, {"w", vertex_set_json(p.w)}, {"v", vertex_set_json(p.v())}};
}

Partition partition_from_json(const json& j, std::size_t n) {
    Partition p;
    p.n = n;
    p.w = vertex_set_from_json(j.at("w"));
    p.d = j.value("d", p.w.size());
    p.validate();
    return p;
}

json trace_json(const MoveTrace& t) {
    json moves = json::array();
    for (const Move& m : t.moves) {
        json removed = json::array();
        json added = json::array();
        for (const Edge& e : m.removed) removed.push_back(edge_json(e));
        for (const Edge& e : m.added) added.push_back(edge_json(e));
        moves.push_back({{"k", m.removed.size()},
                         {"removed", removed},
                         {"added", added},
                         {"consumed", vertex_set_json(m.consumed)}});
    }
    return {{"schema", kTraceSchema}, {"initial", matching_json(t.initial)}, {"moves", moves}};
}

MoveTrace trace_from_json(const json& j) {
    if (j.value("schema", "") != kTraceSchema) throw std::invalid_argument("not a move trace document");
    MoveTrace t;
    t.initial = matching_from_json(j.at("initial"));
    for (const auto& jm : j.at("moves")) {
        Move m;
        for (const auto& e : jm.at("removed")) m.removed.push_back(edge_from_json(e));
        for (const auto& e : jm.at("added")) m.added.push_back(edge_from_json(e));
        m.consumed = vertex_set_from_json(jm.at("consumed"));
        t.moves.push_back(std::move(m));
    }
    return t;
}

json solve_json(const std::string& method, const SolveReport& r, std::size_t n) {
    return {{"schema", kSolveSchema},
            {"method", method},
            {"n", n},
            {"size", r.matching.size()},
            {"matching", matching_json(r.matching)},
            {"optimal", r.optimal},
            {"target_met", r.target_met},
            {"budget_exhausted", r.budget_exhausted},
            {"nodes", r.nodes},
            {"wall_ms", r.wall_ms}};
}

json closeness_json(const ClosenessReport& r) {
    return {{"schema", kClosenessSchema},
            {"partition", partition_json(r.partition)},
            {"deficiency", r.deficiency},
            {"epsilon", r.epsilon},
            {"alpha", r.alpha},
            {"bad_threshold", r.bad_threshold},
            {"badness", r.badness},
            {"bad_v", vertex_set_json(r.bad_v)},
            {"bad_w", vertex_set_json(r.bad_w)},
            {"all_good", r.all_good()}};
}

json stage_log_json(const StageLog& log) {
    json stages = json::array();
    for (std::size_t i = 0; i < log.stages.size(); ++i) {
        stages.push_back({{"name", "M" + std::to_string(i + 1)},
                          {"size", log.stages[i].size()},
                          {"edges", matching_json(log.stages[i])}});
    }
    return {{"bad_v", vertex_set_json(log.bad_v)},
            {"bad_w", vertex_set_json(log.bad_w)},
            {"c", log.c},
            {"m2", log.m2},
            {"m3", log.m3},
            {"m1_min_degree", log.m1_min_degree},
            {"m1_degree_bound", log.m1_degree_bound},
            {"m1_degree_condition", log.m1_degree_condition},
            {"bad_after_m1", vertex_set_json(log.bad_after_m1)},
            {"useful", vertex_set_json(log.useful)},
            {"stages", stages},
            {"failed_stage", log.failed_stage},
            {"obligation", log.obligation}};
}

json absorbing_json(const AbsorbingMatching& a) {
    json triples = json::array();
    for (std::size_t i = 0; i < a.triples.size(); ++i) {
        triples.push_back({{"triple", vertex_set_json(a.triples[i])}, {"absorbers", a.absorbers[i]}});
    }
    return {{"schema", kAbsorbingSchema},
            {"matching", matching_json(a.matching)},
            {"size", a.matching.size()},
            {"gamma", a.gamma},
            {"redundancy", a.redundancy},
            {"min_absorbers", a.min_absorbers},
            {"success", a.success},
            {"exhaustive", a.exhaustive},
            {"hypothesis_holds", a.hypothesis_holds},
            {"size_cap", a.size_cap},
            {"capacity", a.capacity},
            {"contract", a.contract},
            {"coverage", triples}};
}

json fact1_json(const Fact1Report& r) {
    json counts = json::object();
    for (const auto& [kind, by_edges] : r.counts) {
        json row = json::object();
        for (std::size_t e = 0; e < by_edges.size(); ++e)
            if (by_edges[e] != 0) row[std::to_string(e)] = by_edges[e];
        counts[std::string(to_string(kind))] = row;
    }
    json classes = json::array();
    for (const auto& c : r.classes) {
        classes.push_back({{"mask", c.representative.mask()},
                           {"edges", c.edges},
                           {"labeled", c.labeled},
                           {"degrees", c.degrees},
                           {"kind", std::string(to_string(c.kind))}});
    }
    return {{"schema", kFact1Schema},
            {"patterns", r.patterns},
            {"violations", r.violations},
            {"counts", counts},
            {"classes", classes},
            {"base_edge_consistent", r.base_edge_consistent},
            {"ok", r.patterns == 512 && r.violations == 0 && r.base_edge_consistent}};
}

}  // namespace hypermatch::tools
