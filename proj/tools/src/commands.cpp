#include "hypermatch_tools/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hypermatch/absorbing.hpp"
#include "hypermatch/augment.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/exact_solver.hpp"
#include "hypermatch/extremal.hpp"
#include "hypermatch/h3_format.hpp"
#include "hypermatch/link.hpp"
#include "hypermatch_tools/experiments.hpp"
#include "hypermatch_tools/json_io.hpp"
#include "hypermatch_tools/parallel.hpp"

namespace hypermatch::tools {

namespace {

namespace fs = std::filesystem;

struct Options {
    std::string kind;
    std::string suite;
    std::string file;
    std::optional<std::size_t> n;
    std::optional<std::size_t> d;
    std::optional<double> p;
    std::uint64_t seed = 0;
    std::size_t remove = 0;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<std::int64_t> budget_ms;
    std::size_t k_max = 5;
    double alpha = 0.05;
    double gamma = 0.25;
    std::string mode;
    std::string out;
    bool exact = false;
    bool augment = false;
    bool extremal = false;
    bool absorbing = false;
    bool explain = false;
    bool contract = false;
    std::size_t n_min = 9;
    std::size_t n_max = 0;
    std::size_t trials = 0;
    std::vector<double> p_grid;
};

struct Failure {
    int code;
    std::string message;
};

[[noreturn]] void usage(const std::string& msg) { throw Failure{kExitUsage, msg}; }

fs::path sidecar_path(const std::string& h3) { return fs::path(h3).replace_extension(".json"); }

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Failure{kExitAssertion, "cannot write " + o.out};
    f << text;
}

void emit_json(const json& j, const Options& o, std::ostream& out) { emit(j.dump(2) + "\n", o, out); }

Hypergraph3 load(const Options& o) {
    try {
        return load_h3(o.file);
    } catch (const ParseError& e) {
        usage(o.file + ": " + e.what());
    } catch (const std::runtime_error& e) {
        usage(e.what());
    }
}

std::optional<Partition> load_sidecar_partition(const Options& o, std::size_t n) {
    const fs::path side = sidecar_path(o.file);
    if (!fs::exists(side)) return std::nullopt;
    std::ifstream f(side);
    const json j = json::parse(f, nullptr, false);
    if (j.is_discarded() || !j.contains("partition") || j["partition"].is_null()) return std::nullopt;
    return partition_from_json(j["partition"], n);
}

PartitionSearch parse_mode(const std::string& mode) {
    if (mode.empty() || mode == "local") return PartitionSearch::Local;
    if (mode == "exhaustive") return PartitionSearch::Exhaustive;
    if (mode == "bottom") return PartitionSearch::Bottom;
    usage("unknown --mode " + mode + " (exhaustive|local|bottom)");
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) usage(std::string("missing ") + flag);
    return *v;
}

int cmd_gen(const Options& o, std::ostream& out) {
    const std::size_t n = require(o.n, "--n");
    Instance inst;
    json params = {{"n", n}};
    if (o.kind == "star") {
        inst = extremal_star(n);
    } else if (o.kind == "hnd") {
        inst = h_n_d(n, require(o.d, "--d"));
        params["d"] = *o.d;
    } else if (o.kind == "bde") {
        inst = bde_extremal(n, require(o.d, "--d"));
        params["d"] = *o.d;
    } else {
        if (!o.p) usage("random needs --p");
        inst.graph = random_hypergraph(n, *o.p, o.seed);
        params["p"] = *o.p;
    }
    if (o.remove > 0) {
        inst.graph = perturb_remove(inst.graph, o.remove, o.seed);
        params["remove"] = o.remove;
    }
    json meta = {{"schema", kInstanceSchema},
                 {"kind", o.kind},
                 {"generator_version", kGeneratorVersion},
                 {"seed", o.seed},
                 {"params", params},
                 {"n", inst.graph.n()},
                 {"m", inst.graph.num_edges()},
                 {"partition", o.kind == "random" ? json(nullptr) : partition_json(inst.partition)}};
    if (o.out.empty()) {
        out << to_h3(inst.graph);
        return kExitOk;
    }
    save_h3(o.out, inst.graph);
    std::ofstream side(sidecar_path(o.out));
    side << meta.dump(2) << "\n";
    out << meta.dump(2) << "\n";
    return kExitOk;
}

int cmd_degrees(const Options& o, std::ostream& out) {
    const auto h = load(o);
    json j = {{"schema", kDegreesSchema}, {"n", h.n()}, {"m", h.num_edges()}};
    if (h.n() == 0) {
        j["delta1"] = nullptr;
        j["delta2"] = nullptr;
    } else {
        const auto prof = degree_profile(h);
        j["degrees"] = prof.degrees;
        j["delta1"] = prof.delta1;
        j["delta2"] = h.n() >= 2 ? json(prof.delta2) : json(nullptr);
    }
    if (o.d) {
        const auto thr = threshold(static_cast<std::int64_t>(h.n()), static_cast<std::int64_t>(*o.d));
        j["d"] = *o.d;
        j["threshold"] = thr;
        j["above_threshold"] = h.n() > 0 && static_cast<std::int64_t>(min_degree(h, 1)) > thr;
    }
    emit_json(j, o, out);
    return kExitOk;
}

SolveBudget make_budget(const Options& o) {
    SolveBudget b;
    if (o.budget_nodes) b.node_limit = *o.budget_nodes;
    if (o.budget_ms) b.time_limit = std::chrono::milliseconds(*o.budget_ms);
    b.validate();
    return b;
}

AugmentConfig make_augment(const Options& o) {
    AugmentConfig cfg;
    cfg.k_max = o.k_max;
    cfg.seed = o.seed;
    if (o.budget_nodes) cfg.subproblem_nodes = *o.budget_nodes;
    cfg.validate();
    return cfg;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const int chosen = int(o.exact) + int(o.augment) + int(o.extremal) + int(o.absorbing);
    if (chosen != 1) usage("solve needs exactly one of --exact, --augment, --extremal, --absorbing");
    const auto h = load(o);
    json j;
    int code = kExitOk;

    if (o.exact) {
        SolveBudget b = make_budget(o);
        b.target = o.d;
        const auto r = max_matching(h, b);
        j = solve_json("exact", r, h.n());
        if (o.d) {
            j["d"] = *o.d;
            const bool decided = r.target_met || r.optimal;
            j["decision"] = r.target_met ? "yes" : decided ? "no" : "unknown";
            if (!decided) code = kExitBudget;
        } else if (!r.optimal) {
            code = kExitBudget;
        }
    } else if (o.augment) {
        const std::size_t d = o.d.value_or(h.n() / 3);
        const auto r = augment_solve(h, d, make_augment(o));
        j = solve_json("augment", r.report, h.n());
        j["d"] = d;
        j["stalled"] = r.stalled;
        j["iterations"] = r.iterations;
        j["moves"] = r.trace.moves.size();
        if (o.explain) {
            j["trace"] = trace_json(r.trace);
            if (r.stalled && d <= h.n() && d > 0) {
                j["closeness"] = closeness_json(find_partition(h, d, PartitionSearch::Local, o.alpha));
            }
        }
        if (r.report.matching.size() < d) code = r.stalled ? kExitAssertion : kExitBudget;
    } else if (o.extremal) {
        auto part = o.mode.empty() ? load_sidecar_partition(o, h.n()) : std::nullopt;
        const std::size_t d = o.d ? *o.d : part ? part->d : h.n() / 3;
        ClosenessReport close;
        if (part && part->w.size() == d) {
            part->d = d;
            close = classify_goodness(h, *part, o.alpha);
        } else {
            close = find_partition(h, d, parse_mode(o.mode), o.alpha);
        }
        StageConfig cfg;
        cfg.alpha = o.alpha;
        cfg.m1_budget = make_budget(o);
        const auto r = staged_matching(h, close.partition, d, cfg);
        SolveReport rep;
        rep.matching = r.matching;
        rep.target_met = r.matching.size() >= d;
        j = solve_json("extremal", rep, h.n());
        j["d"] = d;
        j["success"] = r.success;
        j["partition"] = partition_json(close.partition);
        j["deficiency"] = close.deficiency;
        j["epsilon"] = close.epsilon;
        j["stage_log"] = stage_log_json(r.log);
        if (o.explain) j["closeness"] = closeness_json(close);
        if (!r.success) code = kExitAssertion;
    } else {
        PipelineConfig cfg;
        cfg.absorb.gamma = o.gamma;
        cfg.absorb.seed = o.seed;
        cfg.absorb.contract = o.contract;
        cfg.augment = make_augment(o);
        if (o.budget_nodes) cfg.backtrack_nodes = *o.budget_nodes;
        const auto r = perfect_via_absorbing(h, cfg);
        j = solve_json("absorbing", r.report, h.n());
        j["success"] = r.success;
        j["failed_phase"] = r.failed_phase;
        j["detail"] = r.detail;
        j["leftover"] = r.leftover;
        j["absorbing_size"] = r.absorbing.matching.size();
        j["absorbing_capacity"] = r.absorbing.capacity;
        if (o.explain) j["absorbing"] = absorbing_json(r.absorbing);
        if (!r.success) code = kExitAssertion;
    }
    if (!j["matching"].is_null() && !matching_from_json(j["matching"]).valid_in(h)) {
        j["error"] = "matching failed validation";
        code = kExitAssertion;
    }
    emit_json(j, o, out);
    return code;
}

int cmd_closeness(const Options& o, std::ostream& out) {
    const auto h = load(o);
    const auto r = find_partition(h, require(o.d, "--d"), parse_mode(o.mode), o.alpha);
    emit_json(closeness_json(r), o, out);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.suite == "fact1") {
        const auto j = fact1_json(verify_fact1());
        emit_json(j, o, out);
        return j["ok"].get<bool>() ? kExitOk : kExitAssertion;
    }
    if (o.suite == "tightness") {
        const auto r = verify_tightness(o.n_max == 0 ? 15 : o.n_max);
        emit_json(tightness_json(r), o, out);
        return r.ok ? kExitOk : kExitAssertion;
    }
    if (o.suite == "thresholds") {
        const auto s = run_threshold_sweep(o.n.value_or(6), o.d.value_or(2), thread_count());
        emit_json(thresholds_json(s), o, out);
        return kExitOk;
    }
    const auto s = scan_threshold_inequality(o.n_min, o.n_max == 0 ? 200 : o.n_max);
    emit_json(inequality_json(s), o, out);
    return s.ok() ? kExitOk : kExitAssertion;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    SweepParams p;
    p.n = require(o.n, "--n");
    p.d = require(o.d, "--d");
    p.trials = o.trials;
    p.p_grid = o.p_grid.empty() ? std::vector<double>{0.5} : o.p_grid;
    p.seed = o.seed;
    if (o.budget_nodes) p.budget_nodes = *o.budget_nodes;
    p.k_max = o.k_max;
    p.threads = thread_count();
    emit(sweep_csv(run_sweep(p)), o, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matchings in 3-uniform hypergraphs: generators, solvers and verification suites", "hypermatch"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Generate an instance (.h3 plus .json sidecar with --out)");
    gen->add_option("kind", o.kind, "star | hnd | bde | random")
        ->required()
        ->check(CLI::IsMember({"star", "hnd", "bde", "random"}));
    gen->add_option("--n", o.n, "Vertex count")->required();
    gen->add_option("--d", o.d, "Matching size / |W|");
    gen->add_option("--p", o.p, "Edge probability (random)")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--remove", o.remove, "Delete this many seeded random edges afterwards");
    gen->add_option("--out", o.out, "Output .h3 path");

    auto* degrees = app.add_subcommand("degrees", "Degree and codegree profile");
    degrees->add_option("file", o.file)->required();
    degrees->add_option("--d", o.d, "Compare against threshold(n, d)");
    degrees->add_option("--out", o.out);

    auto* solve = app.add_subcommand("solve", "Find a matching");
    solve->add_option("file", o.file)->required();
    solve->add_flag("--exact", o.exact, "Branch and bound");
    solve->add_flag("--augment", o.augment, "Greedy start plus augmenting moves");
    solve->add_flag("--extremal", o.extremal, "Staged construction near H_{n,d}");
    solve->add_flag("--absorbing", o.absorbing, "Absorbing pipeline for a perfect matching");
    solve->add_option("--d", o.d, "Target matching size");
    solve->add_option("--budget-nodes", o.budget_nodes, "Search node limit");
    solve->add_option("--budget-ms", o.budget_ms, "Exact search wall-clock limit");
    solve->add_option("--k-max", o.k_max, "Largest augmenting move");
    solve->add_option("--alpha", o.alpha, "Bad-vertex threshold factor");
    solve->add_option("--gamma", o.gamma, "Absorbing parameter");
    solve->add_flag("--contract", o.contract, "Cap |M*| at gamma^3 n / 3");
    solve->add_option("--seed", o.seed, "Seed");
    solve->add_option("--mode", o.mode, "Partition search: exhaustive | local | bottom");
    solve->add_flag("--explain", o.explain, "Include trace, stage log or absorber coverage");
    solve->add_option("--out", o.out);

    auto* closeness = app.add_subcommand("closeness", "Best partition (V, W) and per-vertex badness");
    closeness->add_option("file", o.file)->required();
    closeness->add_option("--d", o.d)->required();
    closeness->add_option("--mode", o.mode, "exhaustive | local | bottom");
    closeness->add_option("--alpha", o.alpha);
    closeness->add_option("--out", o.out);

    auto* verify = app.add_subcommand("verify", "Verification suites");
    verify->add_option("suite", o.suite, "fact1 | tightness | thresholds | inequality")
        ->required()
        ->check(CLI::IsMember({"fact1", "tightness", "thresholds", "inequality"}));
    verify->add_option("--n", o.n, "thresholds: vertex count (<= 6)");
    verify->add_option("--d", o.d, "thresholds: matching size");
    verify->add_option("--n-min", o.n_min, "inequality: smallest n");
    verify->add_option("--n-max", o.n_max, "tightness / inequality: largest n");
    verify->add_option("--out", o.out);

    auto* sweep = app.add_subcommand("sweep", "Random-instance sweep as CSV");
    sweep->add_option("--n", o.n)->required();
    sweep->add_option("--d", o.d)->required();
    sweep->add_option("--trials", o.trials);
    sweep->add_option("--p", o.p_grid, "Comma-separated probabilities")->delimiter(',');
    sweep->add_option("--seed", o.seed);
    sweep->add_option("--budget-nodes", o.budget_nodes);
    sweep->add_option("--k-max", o.k_max);
    sweep->add_option("--out", o.out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (degrees->parsed()) return cmd_degrees(o, out);
        if (solve->parsed()) return cmd_solve(o, out);
        if (closeness->parsed()) return cmd_closeness(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        return cmd_sweep(o, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitAssertion;
    }
}

}  // namespace hypermatch::tools
