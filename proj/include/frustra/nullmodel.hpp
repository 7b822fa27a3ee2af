#pragma once

#include <cstdint>
#include <vector>

#include "frustra/graph.hpp"
#include "frustra/solver.hpp"

namespace frustra {

/// Same nodes and edge positions, with exactly m^- signs redistributed
/// uniformly at random; deterministic per seed.
SignedGraph reshuffle(const SignedGraph& g, std::uint64_t seed);

struct EnsembleStats {
    int runs = 0;
    std::vector<int> values; // per-run L (or proven lower bound), ordered by run index
    double mean = 0.0;
    double sd = 0.0; // sample SD, divisor k-1
    double z = 0.0;
    bool z_defined = false; // false when sd == 0
    bool used_bounds = false;
    int observed = 0; // L (or lower bound) of the input graph itself
};

enum class EnsembleMode {
    exact,
    /// Record the proven lower bound of gap-limited solves instead of L.
    /// The resulting mean underestimates the true reshuffled mean, so the
    /// Z magnitude is one-sided; reports must carry the used_bounds flag.
    lower_bound,
};

/// Solves k independent reshuffles (seeds cfg.seed+1 .. cfg.seed+k) and the
/// observed graph, then derives mean, SD and Z. Runs are distributed over
/// OpenMP threads; results are ordered by run index and bitwise reproducible.
EnsembleStats ensemble(const SignedGraph& g, int k, const SolverConfig& cfg,
                       EnsembleMode mode = EnsembleMode::exact);

/// Single-threaded reference producing identical output; kept for tests and
/// the benchmark harness.
EnsembleStats ensemble_serial(const SignedGraph& g, int k, const SolverConfig& cfg,
                              EnsembleMode mode = EnsembleMode::exact);

} // namespace frustra
