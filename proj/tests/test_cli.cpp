#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hypermatch/augment.hpp"
#include "hypermatch/h3_format.hpp"
#include "hypermatch_tools/commands.hpp"
#include "hypermatch_tools/experiments.hpp"
#include "hypermatch_tools/json_io.hpp"

using namespace hypermatch;
using namespace hypermatch::tools;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / "hypermatch_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("gen writes an instance and a sidecar") {
    const auto path = (scratch() / "star9.h3").string();
    const auto r = run({"gen", "star", "--n", "9", "--out", path});
    REQUIRE(r.code == 0);
    const auto h = load_h3(path);
    CHECK(h.num_edges() == 49);
    CHECK(to_h3(h) == slurp(path));
    const auto meta = json::parse(slurp(scratch() / "star9.json"));
    CHECK(meta["schema"] == kInstanceSchema);
    CHECK(meta["partition"]["w"] == json::array({7, 8}));
    CHECK(meta["generator_version"] == kGeneratorVersion);

    const auto hnd = run({"gen", "hnd", "--n", "9", "--d", "3"});
    CHECK(parse_h3(hnd.out).num_edges() == 63);
    const auto empty = run({"gen", "random", "--n", "12", "--p", "0", "--seed", "1"});
    CHECK(empty.out == "12 0\n");
}

TEST_CASE("solve methods") {
    const auto dir = scratch();
    const auto star = (dir / "star9.h3").string();
    run({"gen", "star", "--n", "9", "--out", star});
    auto r = run({"solve", "--exact", star});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == kSolveSchema);
    CHECK(j["size"] == 2);
    CHECK(j["optimal"] == true);

    const auto hnd = (dir / "hnd12_4.h3").string();
    run({"gen", "hnd", "--n", "12", "--d", "4", "--out", hnd});
    r = run({"solve", "--augment", hnd, "--d", "4", "--explain"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["size"] == 4);
    const auto trace = trace_from_json(j["trace"]);
    CHECK(trace.replay().size() == 4);

    const auto pert = (dir / "perturbed_hnd30_10.h3").string();
    run({"gen", "hnd", "--n", "30", "--d", "10", "--remove", "60", "--seed", "3", "--out", pert});
    r = run({"solve", "--extremal", pert, "--d", "10"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["size"] == 10);
    CHECK(j["stage_log"]["stages"].size() == 5);

    const auto dense = (dir / "dense12.h3").string();
    run({"gen", "random", "--n", "12", "--p", "0.8", "--seed", "2", "--out", dense});
    r = run({"solve", "--absorbing", dense, "--explain"});
    CHECK(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["size"] == 4);
    CHECK(j["absorbing"]["schema"] == kAbsorbingSchema);

    r = run({"solve", "--augment", star, "--d", "3", "--explain"});
    CHECK(r.code == 1);
    j = json::parse(r.out);
    CHECK(j["stalled"] == true);
    CHECK(j["closeness"]["schema"] == kClosenessSchema);
    r = run({"solve", "--exact", star, "--budget-nodes", "1", "--d", "3"});
    CHECK(r.code == 3);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"gen", "cube", "--n", "9"}).code == 2);
    CHECK(run({"solve", "missing.h3"}).code == 2);
    CHECK(run({"solve", "--exact", "/nonexistent.h3"}).code == 2);
    CHECK(run({"gen", "star", "--n", "7"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("degrees and closeness") {
    const auto path = (scratch() / "hnd9_3.h3").string();
    run({"gen", "hnd", "--n", "9", "--d", "3", "--out", path});
    auto j = json::parse(run({"degrees", path, "--d", "3"}).out);
    CHECK(j["delta1"] == 18);
    CHECK(j["delta2"] == 3);
    CHECK(j["threshold"] == 13);
    CHECK(j["above_threshold"] == true);
    j = json::parse(run({"closeness", path, "--d", "3", "--mode", "exhaustive"}).out);
    CHECK(j["deficiency"] == 0);
    CHECK(j["partition"]["w"] == json::array({6, 7, 8}));
}

TEST_CASE("verify suites") {
    auto r = run({"verify", "fact1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["violations"] == 0);
    r = run({"verify", "tightness", "--n-max", "12"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["rows"].size() == 3);
    const auto a = run({"verify", "thresholds", "--n", "5", "--d", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == run({"verify", "thresholds", "--n", "5", "--d", "1"}).out);
    const auto t = json::parse(a.out);
    CHECK(t["instances"] == 1024);
    CHECK(t["empirical_threshold"] == 1);
}

TEST_CASE("threshold sweep small cases") {
    const auto s = run_threshold_sweep(3, 1, 1);
    CHECK(s.instances == 2);
    CHECK(s.without_matching[0] == 1);
    CHECK(s.empirical_threshold == 1);
    CHECK_THROWS(run_threshold_sweep(7, 2, 1));
    CHECK(run_threshold_sweep(6, 2, 1).total == run_threshold_sweep(6, 2, 4).total);
}

TEST_CASE("sweep csv") {
    auto r = run({"sweep", "--n", "9", "--d", "3", "--trials", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == std::string(kSweepHeader) + "\n");
    r = run({"sweep", "--n", "9", "--d", "2", "--trials", "3", "--p", "0.3,0.7", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
    CHECK(r.out == run({"sweep", "--n", "9", "--d", "2", "--trials", "3", "--p", "0.3,0.7", "--seed", "5"}).out);
    CHECK(run({"sweep", "--n", "9", "--d", "4"}).code == 2);
}

TEST_CASE("trace json round trip") {
    MoveTrace t;
    t.initial = Matching({Edge(0, 1, 2)});
    t.moves.push_back(Move{{Edge(0, 1, 2)}, {Edge(0, 3, 4), Edge(1, 2, 5)}, VertexSet{3, 4, 5}});
    const auto back = trace_from_json(trace_json(t));
    CHECK(back.replay().edges() == t.replay().edges());
    CHECK(back.moves[0].consumed == VertexSet{3, 4, 5});
    CHECK_THROWS(trace_from_json(json{{"schema", "other"}}));
}
