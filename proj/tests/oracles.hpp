#pragma once

// Test-only oracles kept deliberately independent of the library's solver and
// spectral code paths: plain loops, full enumeration, exact polynomial roots.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "frustra/graph.hpp"

namespace oracles {

// Plain per-edge recount, no shared helpers.
inline int naive_count(const std::vector<frustra::SignedEdge>& edges,
                       const std::vector<std::uint8_t>& colour) {
    int c = 0;
    for (const auto& e : edges) {
        bool same = colour[e.u] == colour[e.v];
        if (e.sign > 0 && !same) ++c;
        if (e.sign < 0 && same) ++c;
    }
    return c;
}

// Exhaustive minimum over all 2^n colourings (n <= ~20).
inline int exhaustive_min(const frustra::SignedGraph& g) {
    const int n = g.node_count();
    std::vector<frustra::SignedEdge> edges(g.edges().begin(), g.edges().end());
    int best = static_cast<int>(edges.size());
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<std::uint8_t> colour(n);
        for (int v = 0; v < n; ++v) colour[v] = (mask >> v) & 1;
        best = std::min(best, naive_count(edges, colour));
    }
    return best;
}

// Exhaustive minimum of -sum a_ij s_i s_j over all spin vectors.
inline long long exhaustive_min_hamiltonian(const frustra::SignedGraph& g) {
    const int n = g.node_count();
    long long best = g.edge_count() + 1;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        long long h = 0;
        for (const auto& e : g.edges()) {
            int su = (mask >> e.u) & 1 ? 1 : -1;
            int sv = (mask >> e.v) & 1 ? 1 : -1;
            h -= static_cast<long long>(e.sign) * su * sv;
        }
        best = std::min(best, h);
    }
    return best;
}

// Seeded G(n, p) signed graph with a fixed negative-edge fraction.
inline frustra::SignedGraph random_graph(int n, double edge_prob, double neg_fraction,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<frustra::SignedEdge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uni(rng) < edge_prob) edges.push_back({i, j, 1});
    int negatives = static_cast<int>(std::llround(neg_fraction * edges.size()));
    for (int i = 0; i < negatives; ++i) {
        std::uniform_int_distribution<int> pick(i, static_cast<int>(edges.size()) - 1);
        std::swap(edges[i], edges[pick(rng)]);
        edges[i].sign = -1;
    }
    return frustra::SignedGraph(n, std::move(edges));
}

// Seeded uniform random labelled tree via a random attachment order.
inline frustra::SignedGraph random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<frustra::SignedEdge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back({pick(rng), v, 1});
    }
    return frustra::SignedGraph(n, std::move(edges));
}

inline frustra::SignedGraph cycle_graph(int n, int sign = 1) {
    std::vector<frustra::SignedEdge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n), sign});
    return frustra::SignedGraph(n, std::move(edges));
}

// Characteristic polynomial coefficients of a symmetric 0/1 matrix via
// Faddeev-LeVerrier (exact in double for n <= 8), p(x) = x^n + c1 x^(n-1) + ...
inline std::vector<double> char_poly(const frustra::SignedGraph& g) {
    const int n = g.node_count();
    std::vector<double> a(n * n, 0.0);
    for (const auto& e : g.edges()) {
        a[e.u * n + e.v] = 1.0;
        a[e.v * n + e.u] = 1.0;
    }
    std::vector<double> mprev(n * n, 0.0), m(n * n), coeff(n + 1, 0.0);
    coeff[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        // M_k = A * M_{k-1} + c_{k-1} I
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = (i == j) ? coeff[k - 1] : 0.0;
                for (int t = 0; t < n; ++t) s += a[i * n + t] * mprev[t * n + j];
                m[i * n + j] = s;
            }
        double trace = 0.0;
        std::vector<double> am(n * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int t = 0; t < n; ++t) s += a[i * n + t] * m[t * n + j];
                am[i * n + j] = s;
                if (i == j) trace += s;
            }
        coeff[k] = -trace / k;
        mprev = m;
    }
    return coeff; // x^n + coeff[1] x^(n-1) + ... + coeff[n]
}

// Monic polynomial with the given roots, multiplicities included:
// prod (x - r_i), coefficients in the char_poly layout.
inline std::vector<double> poly_from_roots(const std::vector<double>& roots) {
    std::vector<double> coeff{1.0};
    for (double r : roots) {
        std::vector<double> next(coeff.size() + 1, 0.0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i] += coeff[i];
            next[i + 1] -= r * coeff[i];
        }
        coeff = std::move(next);
    }
    return coeff;
}

// A spectrum (with multiplicities) matches the matrix exactly when the
// expanded prod (x - l_j) reproduces the characteristic polynomial.
inline bool spectrum_matches_char_poly(const frustra::SignedGraph& g,
                                       const std::vector<double>& spectrum, double tol) {
    auto exact = char_poly(g);
    auto rebuilt = poly_from_roots(spectrum);
    if (exact.size() != rebuilt.size()) return false;
    for (std::size_t i = 0; i < exact.size(); ++i)
        if (std::abs(exact[i] - rebuilt[i]) > tol) return false;
    return true;
}

} // namespace oracles
