#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frustra/graph.hpp"
#include "frustra/solver.hpp"

namespace frustra {

/// rho = 2m / (n(n-1)).
double density(int n, int m);

/// F(G) = 1 - 2L/m, in [0,1]; throws on m == 0 (undefined).
double normalized_frustration(int L, int m);

/// Optimal Ising Hamiltonian with +-1 couplings: H = 2L - m.
long long hamiltonian(long long L, long long m);

/// All eigenvalues of the entrywise-absolute adjacency matrix (the unsigned
/// underlying graph), nonincreasing. Bounded to node_cap nodes.
std::vector<double> spectrum_abs(const SignedGraph& g, int node_cap = 2000);

/// Proportion of even-length to total closed walks: sum cosh(l_j) / sum exp(l_j),
/// in [0.5, 1]; exactly 1 for bipartite underlying graphs.
double beta_bipartivity(std::span<const double> spectrum);
double beta_bipartivity(const SignedGraph& g, int node_cap = 2000);

/// Spectral bipartivity index: sum exp(-l_j) / sum exp(l_j), in (0, 1].
double bs_bipartivity(std::span<const double> spectrum);
double bs_bipartivity(const SignedGraph& g, int node_cap = 2000);

struct MeasureReport {
    int n = 0;
    int m = 0;
    int m_minus = 0;
    double density = 0.0;
    int L_lower = 0;
    int L_upper = 0;
    bool L_exact = false;
    std::optional<double> F; // absent when m == 0
    long long H_lower = 0;
    long long H_upper = 0;
    std::optional<double> beta;
    std::optional<double> bs;
};

/// Assembles the scalar measures from a solve result. Spectral bipartivity is
/// only attached when requested and the graph is within the spectral cap.
MeasureReport build_measures(const SignedGraph& g, const FrustrationResult& r,
                             bool with_spectral = false, int node_cap = 2000);

} // namespace frustra
