#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "frustra/graph.hpp"

namespace frustra {

struct SolverConfig {
    /// Wall-clock budget in seconds; unset = unlimited.
    std::optional<double> time_limit;
    /// Stop once (upper - lower) / upper <= target_gap; 0 proves optimality.
    double target_gap = 0.0;
    std::uint64_t seed = 0;
    int heuristic_restarts = 24;
    /// Hard cap for brute-force enumeration (2^(n-1) colourings).
    int brute_force_cap = 25;
};

struct FrustrationResult {
    int lower_bound = 0;
    int upper_bound = 0;
    Colouring colouring;
    bool exact = false;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;

    double gap() const {
        return static_cast<double>(upper_bound - lower_bound) /
               static_cast<double>(upper_bound > 1 ? upper_bound : 1);
    }
};

/// Exhaustive minimum over all colourings with the first node fixed white.
/// Refuses graphs above cfg cap (default 25 nodes); use solve_exact instead.
FrustrationResult brute_force(const SignedGraph& g, int node_cap = 25);

/// Greedy edge-disjoint packing of negative triangles, then negative cycles
/// of length <= 5. Each packed cycle forces at least one frustrated edge, so
/// the count is a valid lower bound on the frustration index.
int lower_bound_pack(const SignedGraph& g);

/// Restarted steepest-descent single-node flips. The first start is the
/// all-white colouring, so the returned count never exceeds m^- ; any local
/// optimum is also at most m/2.
FrustrationResult local_search(const SignedGraph& g, const SolverConfig& cfg);

/// Exact frustration index by preprocessing plus depth-first branch and bound
/// per biconnected block. Honours cfg.target_gap and cfg.time_limit; the
/// result is exact when lower == upper. Deterministic for a fixed seed when
/// no time limit interrupts the search.
FrustrationResult solve_exact(const SignedGraph& g, const SolverConfig& cfg = {});

} // namespace frustra
