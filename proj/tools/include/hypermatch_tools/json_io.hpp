#pragma once

#include <string>

#include <json.hpp>

#include "hypermatch/absorbing.hpp"
#include "hypermatch/augment.hpp"
#include "hypermatch/exact_solver.hpp"
#include "hypermatch/extremal.hpp"
#include "hypermatch/link.hpp"

namespace hypermatch::tools {

using nlohmann::json;

// Every document carries "schema": "hypermatch.<kind>/<version>".
inline constexpr const char* kSolveSchema = "hypermatch.solve/1";
inline constexpr const char* kTraceSchema = "hypermatch.trace/1";
inline constexpr const char* kInstanceSchema = "hypermatch.instance/1";
inline constexpr const char* kClosenessSchema = "hypermatch.closeness/1";
inline constexpr const char* kAbsorbingSchema = "hypermatch.absorbing/1";
inline constexpr const char* kDegreesSchema = "hypermatch.degrees/1";
inline constexpr const char* kFact1Schema = "hypermatch.verify.fact1/1";
inline constexpr const char* kGeneratorVersion = "1";

json edge_json(const Edge& e);
Edge edge_from_json(const json& j);
json matching_json(const Matching& m);
Matching matching_from_json(const json& j);
json vertex_set_json(VertexSet s);
VertexSet vertex_set_from_json(const json& j);

json partition_json(const Partition& p);
Partition partition_from_json(const json& j, std::size_t n);

json trace_json(const MoveTrace& t);
MoveTrace trace_from_json(const json& j);

/// Base SolveReport document; callers add method-specific fields.
json solve_json(const std::string& method, const SolveReport& r, std::size_t n);

json closeness_json(const ClosenessReport& r);
json stage_log_json(const StageLog& log);
json absorbing_json(const AbsorbingMatching& a);
json fact1_json(const Fact1Report& r);

}  // namespace hypermatch::tools
