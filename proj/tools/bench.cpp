// Compares the OpenMP ensemble/series kernels against their serial reference
// implementations and checks that both produce identical values.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "frustra/appkits.hpp"
#include "frustra/nullmodel.hpp"
#include "frustra/solver.hpp"

using namespace frustra;
namespace chrono = std::chrono;

namespace {

double seconds_since(chrono::steady_clock::time_point t0) {
    return chrono::duration<double>(chrono::steady_clock::now() - t0).count();
}

SignedGraph random_instance(int n, double p, double q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<SignedEdge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uni(rng) < p) edges.push_back({i, j, uni(rng) < q ? -1 : 1});
    return SignedGraph(n, std::move(edges));
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    {
        SignedGraph g = random_instance(40, 0.25, 0.5, 7);
        SolverConfig cfg;
        cfg.seed = 1;
        const int k = 200;

        auto t0 = chrono::steady_clock::now();
        EnsembleStats serial = ensemble_serial(g, k, cfg);
        double ts = seconds_since(t0);

        t0 = chrono::steady_clock::now();
        EnsembleStats parallel = ensemble(g, k, cfg);
        double tp = seconds_since(t0);

        bool same = serial.values == parallel.values && serial.observed == parallel.observed;
        std::printf("ensemble k=%d (n=%d m=%d): serial %.3fs  omp %.3fs  speedup %.2fx  %s\n", k,
                    g.node_count(), g.edge_count(), ts, tp, ts / tp,
                    same ? "outputs identical" : "OUTPUT MISMATCH");
        if (!same) return 1;
    }

    {
        std::vector<LabelledGraph> frames;
        for (int f = 0; f < 48; ++f)
            frames.push_back({"f" + std::to_string(f), random_instance(36, 0.3, 0.4, 100 + f)});
        SolverConfig cfg;

        auto t0 = chrono::steady_clock::now();
        auto serial = temporal_series_serial(frames, cfg);
        double ts = seconds_since(t0);

        t0 = chrono::steady_clock::now();
        auto parallel = temporal_series(frames, cfg);
        double tp = seconds_since(t0);

        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].L_upper == parallel[i].L_upper &&
                   serial[i].partition == parallel[i].partition;
        std::printf("series %zu frames: serial %.3fs  omp %.3fs  speedup %.2fx  %s\n", frames.size(),
                    ts, tp, ts / tp, same ? "outputs identical" : "OUTPUT MISMATCH");
        if (!same) return 1;
    }

    return 0;
}
