#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frustra/appkits.hpp"
#include "frustra/errors.hpp"
#include "frustra/measures.hpp"
#include "frustra/nullmodel.hpp"
#include "frustra/report.hpp"
#include "frustra/solver.hpp"

namespace fs = std::filesystem;
using namespace frustra;

namespace {

constexpr int kExitExact = 0;
constexpr int kExitError = 1;
constexpr int kExitBounds = 2;

void apply_workers(int workers) {
    if (workers <= 0) {
        if (const char* env = std::getenv("FRUSTRA_WORKERS")) workers = std::atoi(env);
    }
    if (workers > 0) omp_set_num_threads(workers);
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2) << '\n';
    }
}

struct CommonOpts {
    std::string input;
    std::string out_path;
    double gap = 0.0;
    double time_limit = 0.0;
    std::uint64_t seed = 0;
    int restarts = 24;
    int workers = 0;
};

SolverConfig to_config(const CommonOpts& o) {
    SolverConfig cfg;
    cfg.target_gap = o.gap;
    if (o.time_limit > 0.0) cfg.time_limit = o.time_limit;
    cfg.seed = o.seed;
    cfg.heuristic_restarts = o.restarts;
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_solver_knobs = true) {
    cmd->add_option("input", o.input, "input file")->required();
    cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
    cmd->add_option("--workers", o.workers, "worker threads (default: FRUSTRA_WORKERS or all cores)");
    if (with_solver_knobs) {
        cmd->add_option("--gap", o.gap, "stop at this optimality gap (0 proves optimality)")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--time-limit", o.time_limit, "wall-clock budget in seconds");
        cmd->add_option("--seed", o.seed, "solver / ensemble seed");
        cmd->add_option("--restarts", o.restarts, "local-search restarts")->check(CLI::PositiveNumber);
    }
}

int cmd_analyze(const CommonOpts& o, bool spectral) {
    apply_workers(o.workers);
    SignedGraph g = parse_edge_list_file(o.input);
    SolverConfig cfg = to_config(o);
    FrustrationResult r = solve_exact(g, cfg);
    emit(analysis_json(o.input, g, r, cfg, nullptr, spectral), o.out_path);
    return r.exact ? kExitExact : kExitBounds;
}

int cmd_zscore(const CommonOpts& o, int runs, const std::string& mode) {
    apply_workers(o.workers);
    SignedGraph g = parse_edge_list_file(o.input);
    SolverConfig cfg = to_config(o);
    EnsembleMode emode = EnsembleMode::exact;
    if (mode == "bounds") {
        emode = EnsembleMode::lower_bound;
        if (cfg.target_gap == 0.0) cfg.target_gap = 0.15;
    } else if (mode != "exact") {
        throw ContractError("--mode must be exact or bounds");
    }
    EnsembleStats stats = ensemble(g, runs, cfg, emode);
    FrustrationResult r = solve_exact(g, cfg);
    emit(analysis_json(o.input, g, r, cfg, &stats), o.out_path);
    return (r.exact && !stats.used_bounds) ? kExitExact : kExitBounds;
}

int cmd_partition(const CommonOpts& o, const std::string& labels_path) {
    apply_workers(o.workers);
    SignedGraph g = parse_edge_list_file(o.input);
    SolverConfig cfg = to_config(o);
    FrustrationResult r = solve_exact(g, cfg);

    Json j;
    j["version"] = kToolVersion;
    j["input"] = o.input;
    j["seed"] = cfg.seed;
    j["L"] = r.exact ? Json(r.upper_bound) : Json{{"lower", r.lower_bound}, {"upper", r.upper_bound}};
    j["exact"] = r.exact;
    Json part = partition_json(g, r.colouring);
    j["group_a"] = part["group_a"];
    j["group_b"] = part["group_b"];
    j["frustrated_edges"] = part["frustrated_edges"];

    if (!labels_path.empty()) {
        std::ifstream in(labels_path);
        if (!in) throw ParseError("cannot open labels file " + labels_path);
        std::map<std::string, std::string> side_of;
        std::string node, side;
        while (in >> node >> side) side_of[node] = side;
        std::vector<std::string> classes;
        for (const auto& [k, v] : side_of)
            if (std::find(classes.begin(), classes.end(), v) == classes.end()) classes.push_back(v);
        if (classes.size() > 2)
            throw ContractError("labels file has more than two classes; merge them first");
        int match = 0, total = 0;
        for (int v = 0; v < g.node_count(); ++v) {
            auto it = side_of.find(g.label(v));
            if (it == side_of.end()) continue;
            ++total;
            bool cls = !classes.empty() && it->second == classes[0];
            match += (r.colouring[v] == 1) == cls;
        }
        // complement alignment: report the better oriented count, ties toward identity
        int aligned = std::max(match, total - match);
        j["label_match"] = Json{{"file", labels_path},
                                {"matched", aligned},
                                {"total", total},
                                {"orientation_flipped", total - match > match}};
    }
    emit(j, o.out_path);
    return r.exact ? kExitExact : kExitBounds;
}

int cmd_portfolio(const CommonOpts& o, double threshold) {
    apply_workers(o.workers);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.input))
        if (entry.is_regular_file() && entry.path().extension() == ".csv")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ContractError("no .csv files under " + o.input);

    SolverConfig cfg = to_config(o);
    std::vector<FrameReport> reports;
    int counts[3] = {0, 0, 0};
    std::ostringstream csv;
    csv << frame_csv_header() << '\n';
    for (const auto& f : files) {
        FrameReport rep;
        rep.label = f.stem().string();
        try {
            auto c = parse_correlation_csv_file(f.string());
            SignedGraph g = portfolio_graph(c, threshold);
            auto frames = std::vector<LabelledGraph>{{rep.label, g}};
            rep = temporal_series_serial(frames, cfg)[0];
        } catch (const std::exception& e) {
            rep.error = e.what();
        }
        if (rep.error.empty()) ++counts[static_cast<int>(rep.state)];
        csv << frame_csv_row(rep) << '\n';
        reports.push_back(std::move(rep));
    }

    Json summary;
    summary["version"] = kToolVersion;
    summary["threshold"] = threshold;
    summary["frames"] = reports.size();
    summary["all_positive"] = counts[0];
    summary["balanced"] = counts[1];
    summary["unbalanced"] = counts[2];

    if (!o.out_path.empty()) {
        std::ofstream out(o.out_path);
        if (!out) throw std::runtime_error("cannot write " + o.out_path);
        out << csv.str();
        std::cout << summary.dump(2) << '\n';
    } else {
        std::cout << csv.str();
        std::cerr << summary.dump(2) << '\n';
    }
    bool all_exact = std::all_of(reports.begin(), reports.end(), [](const FrameReport& r) {
        return r.error.empty() && r.L_exact;
    });
    return all_exact ? kExitExact : kExitBounds;
}

int cmd_series(const CommonOpts& o) {
    apply_workers(o.workers);
    SolverConfig cfg = to_config(o);
    std::vector<LabelledGraph> frames = fs::is_directory(o.input)
                                            ? load_frames_directory(o.input)
                                            : load_frames_manifest(o.input);
    auto reports = temporal_series(frames, cfg);
    std::ostringstream csv;
    csv << frame_csv_header() << '\n';
    for (const auto& rep : reports) csv << frame_csv_row(rep) << '\n';
    if (!o.out_path.empty()) {
        std::ofstream out(o.out_path);
        if (!out) throw std::runtime_error("cannot write " + o.out_path);
        out << csv.str();
    } else {
        std::cout << csv.str();
    }
    bool all_exact = std::all_of(reports.begin(), reports.end(), [](const FrameReport& r) {
        return r.error.empty() && r.L_exact;
    });
    return all_exact ? kExitExact : kExitBounds;
}

int cmd_ising(const CommonOpts& o, int dim, int side, int hypercube, double q, int instances,
              bool as_json) {
    apply_workers(o.workers);
    IsingSpec spec;
    if (hypercube > 0) {
        spec.dimension = hypercube;
        spec.side.reset();
    } else {
        spec.dimension = dim;
        spec.side = side;
    }
    spec.negative_fraction = q;

    SolverConfig cfg = to_config(o);
    std::vector<int> values(instances);
    std::vector<double> times(instances);
    std::vector<bool> exact(instances);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < instances; ++i) {
        IsingSpec inst = spec;
        inst.seed = o.seed + static_cast<std::uint64_t>(i);
        SignedGraph g = ising_generate(inst);
        FrustrationResult r = solve_exact(g, cfg);
        values[i] = r.upper_bound;
        times[i] = r.elapsed_seconds;
        exact[i] = r.exact;
    }
    double mean = 0, time_mean = 0;
    for (int i = 0; i < instances; ++i) {
        mean += values[i];
        time_mean += times[i];
    }
    mean /= instances;
    time_mean /= instances;
    double sd = 0;
    for (int v : values) sd += (v - mean) * (v - mean);
    sd = instances > 1 ? std::sqrt(sd / (instances - 1)) : 0.0;
    bool all_exact = std::all_of(exact.begin(), exact.end(), [](bool b) { return b; });

    SignedGraph shape = ising_generate(spec);
    if (as_json) {
        Json j;
        j["version"] = kToolVersion;
        j["dimension"] = spec.dimension;
        if (spec.side) j["side"] = *spec.side;
        j["hypercube"] = !spec.side.has_value();
        j["n"] = shape.node_count();
        j["m"] = shape.edge_count();
        j["negative_fraction"] = q;
        j["instances"] = instances;
        j["seed"] = o.seed;
        j["L_mean"] = mean;
        j["L_sd"] = sd;
        j["L_values"] = values;
        j["mean_solve_seconds"] = time_mean;
        j["all_exact"] = all_exact;
        emit(j, o.out_path);
    } else {
        std::cout << "dim=" << spec.dimension;
        if (spec.side) std::cout << " side=" << *spec.side;
        std::cout << " n=" << shape.node_count() << " m=" << shape.edge_count() << " q=" << q
                  << " runs=" << instances << "  L " << mean << " +- " << sd << "  ("
                  << time_mean << " s/instance)" << (all_exact ? "" : "  [bounds]") << '\n';
    }
    return all_exact ? kExitExact : kExitBounds;
}

int cmd_bipartivity(const CommonOpts& o) {
    apply_workers(o.workers);
    SignedGraph g = parse_edge_list_file(o.input);
    if (g.negative_edge_count() != 0)
        throw ContractError("bipartivity expects an all-positive (unsigned) graph");
    SolverConfig cfg = to_config(o);
    FrustrationResult r = bipartite_edge_frustration(g, cfg);

    Json j;
    j["version"] = kToolVersion;
    j["input"] = o.input;
    j["seed"] = cfg.seed;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    j["L"] = r.exact ? Json(r.upper_bound) : Json{{"lower", r.lower_bound}, {"upper", r.upper_bound}};
    j["exact"] = r.exact;
    j["F"] = g.edge_count() > 0 ? Json(normalized_frustration(r.upper_bound, g.edge_count()))
                                : Json(nullptr);
    if (g.node_count() <= 2000 && g.node_count() > 0) {
        auto spec = spectrum_abs(g);
        j["beta"] = beta_bipartivity(spec);
        j["b_s"] = bs_bipartivity(spec);
    } else {
        j["beta"] = nullptr;
        j["b_s"] = nullptr;
    }
    j["elapsed_seconds"] = r.elapsed_seconds;
    emit(j, o.out_path);
    return r.exact ? kExitExact : kExitBounds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frustra: frustration index and balance analysis for signed graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonOpts o;
    bool spectral = false;
    auto* analyze = app.add_subcommand("analyze", "solve one signed graph and report measures");
    add_common(analyze, o);
    analyze->add_flag("--spectral", spectral, "attach spectral bipartivity (n <= 2000)");

    int runs = 500;
    std::string mode = "exact";
    auto* zscore = app.add_subcommand("zscore", "reshuffled-ensemble Z score");
    add_common(zscore, o);
    zscore->add_option("--runs", runs, "number of reshuffles")->check(CLI::Range(2, 1000000));
    zscore->add_option("--mode", mode, "exact | bounds");

    std::string labels_path;
    auto* partition = app.add_subcommand("partition", "optimal two-group partition");
    add_common(partition, o);
    partition->add_option("--labels", labels_path, "side file `<node> <class>` for match counts");

    double threshold = 0.2;
    auto* portfolio = app.add_subcommand("portfolio", "threshold correlation CSVs and classify frames");
    add_common(portfolio, o);
    portfolio->add_option("--threshold", threshold, "absolute correlation cut")
        ->check(CLI::Range(1e-9, 0.999999));

    auto* series = app.add_subcommand("series", "frame reports for a manifest or directory");
    add_common(series, o);

    CommonOpts oi;
    int dim = 2, side = 0, hypercube = 0, instances = 10;
    double q = 0.5;
    bool ising_json = false;
    auto* ising = app.add_subcommand("ising", "generate and solve lattice instances");
    ising->add_option("--dim", dim, "grid dimension");
    ising->add_option("--side", side, "grid side length");
    ising->add_option("--hypercube", hypercube, "hypercube dimension (overrides --dim/--side)");
    ising->add_option("--neg", q, "negative edge fraction")->check(CLI::Range(0.0, 1.0));
    ising->add_option("--instances", instances, "instances per setting")->check(CLI::PositiveNumber);
    ising->add_option("--seed", oi.seed, "base seed");
    ising->add_option("--gap", oi.gap, "target gap")->check(CLI::Range(0.0, 1.0));
    ising->add_option("--time-limit", oi.time_limit, "per-run budget in seconds");
    ising->add_option("--out", oi.out_path, "write the JSON report here");
    ising->add_option("--workers", oi.workers, "worker threads");
    ising->add_flag("--json", ising_json, "JSON output");

    auto* bip = app.add_subcommand("bipartivity", "L, F, beta and b_s of an unsigned graph");
    add_common(bip, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(o, spectral);
        if (zscore->parsed()) return cmd_zscore(o, runs, mode);
        if (partition->parsed()) return cmd_partition(o, labels_path);
        if (portfolio->parsed()) return cmd_portfolio(o, threshold);
        if (series->parsed()) return cmd_series(o);
        if (ising->parsed()) {
            if (hypercube == 0 && side < 2) throw ContractError("need --side >= 2 or --hypercube");
            return cmd_ising(oi, dim, side, hypercube, q, instances, ising_json);
        }
        if (bip->parsed()) return cmd_bipartivity(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
