#include "frustra/nullmodel.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "frustra/errors.hpp"

namespace frustra {

SignedGraph reshuffle(const SignedGraph& g, std::uint64_t seed) {
    const int m = g.edge_count();
    const int m_minus = g.negative_edge_count();
    std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges) e.sign = 1;

    // Partial Fisher-Yates: the first m_minus slots select the negative edges.
    std::mt19937_64 rng(seed);
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < m_minus; ++i) {
        std::uniform_int_distribution<int> pick(i, m - 1);
        std::swap(idx[i], idx[pick(rng)]);
        edges[idx[i]].sign = -1;
    }
    return SignedGraph(g.node_count(), std::move(edges), g.labels());
}

namespace {

int run_value(const SignedGraph& g, const SolverConfig& cfg, EnsembleMode mode) {
    FrustrationResult r = solve_exact(g, cfg);
    return mode == EnsembleMode::exact ? r.upper_bound : r.lower_bound;
}

EnsembleStats finish(EnsembleStats stats) {
    const int k = stats.runs;
    double sum = std::accumulate(stats.values.begin(), stats.values.end(), 0.0);
    stats.mean = sum / k;
    double ss = 0.0;
    for (int v : stats.values) ss += (v - stats.mean) * (v - stats.mean);
    stats.sd = std::sqrt(ss / (k - 1));
    if (stats.sd > 0.0) {
        stats.z = (stats.observed - stats.mean) / stats.sd;
        stats.z_defined = true;
    }
    return stats;
}

EnsembleStats run_ensemble(const SignedGraph& g, int k, const SolverConfig& cfg,
                           EnsembleMode mode, bool parallel) {
    if (k < 2) throw ContractError("ensemble needs k >= 2 (SD undefined otherwise)");
    EnsembleStats stats;
    stats.runs = k;
    stats.used_bounds = mode == EnsembleMode::lower_bound;
    stats.values.assign(k, 0);
    stats.observed = run_value(g, cfg, mode);

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < k; ++i) {
            SignedGraph r = reshuffle(g, cfg.seed + 1 + static_cast<std::uint64_t>(i));
            stats.values[i] = run_value(r, cfg, mode);
        }
    } else {
        for (int i = 0; i < k; ++i) {
            SignedGraph r = reshuffle(g, cfg.seed + 1 + static_cast<std::uint64_t>(i));
            stats.values[i] = run_value(r, cfg, mode);
        }
    }
    return finish(std::move(stats));
}

} // namespace

EnsembleStats ensemble(const SignedGraph& g, int k, const SolverConfig& cfg, EnsembleMode mode) {
    return run_ensemble(g, k, cfg, mode, true);
}

EnsembleStats ensemble_serial(const SignedGraph& g, int k, const SolverConfig& cfg,
                              EnsembleMode mode) {
    return run_ensemble(g, k, cfg, mode, false);
}

} // namespace frustra
