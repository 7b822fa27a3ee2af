#include "frustra/measures.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "frustra/errors.hpp"

namespace frustra {

double density(int n, int m) {
    if (n < 2) return 0.0;
    return 2.0 * m / (static_cast<double>(n) * (n - 1));
}

double normalized_frustration(int L, int m) {
    if (m <= 0) throw ContractError("normalized frustration is undefined for m = 0");
    if (L < 0 || 2 * L > m) throw ContractError("L outside [0, m/2]");
    return 1.0 - 2.0 * static_cast<double>(L) / static_cast<double>(m);
}

long long hamiltonian(long long L, long long m) {
    if (L < 0 || L > m) throw ContractError("L outside [0, m]");
    return 2 * L - m;
}

std::vector<double> spectrum_abs(const SignedGraph& g, int node_cap) {
    const int n = g.node_count();
    if (n > node_cap)
        throw ContractError("spectrum request for n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(node_cap));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = 1.0;
        a(e.v, e.u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");
    std::vector<double> lambda(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(lambda.rbegin(), lambda.rend());

    // trace identities: sum l = 0 and sum l^2 = 2m
    double s1 = 0.0, s2 = 0.0;
    for (double l : lambda) {
        s1 += l;
        s2 += l * l;
    }
    double tol = 1e-8 * std::max(1, g.edge_count());
    if (std::abs(s1) > tol || std::abs(s2 - 2.0 * g.edge_count()) > tol)
        throw std::runtime_error("spectrum failed trace identity checks");
    return lambda;
}

namespace {

// Shift by the spectral radius so every exponent is <= 0; the graph spectrum
// satisfies |l_j| <= l_max, so shifted terms cannot overflow.
struct ShiftedSums {
    double even = 0.0; // sum cosh(l) * exp(-l_max)
    double neg = 0.0;  // sum exp(-l)  * exp(-l_max)
    double pos = 0.0;  // sum exp(l)   * exp(-l_max)
};

ShiftedSums shifted_sums(std::span<const double> spectrum) {
    double lmax = spectrum.empty() ? 0.0 : *std::max_element(spectrum.begin(), spectrum.end());
    ShiftedSums s;
    for (double l : spectrum) {
        double ep = std::exp(l - lmax);
        double en = std::exp(-l - lmax);
        s.pos += ep;
        s.neg += en;
        s.even += 0.5 * (ep + en);
    }
    return s;
}

} // namespace

double beta_bipartivity(std::span<const double> spectrum) {
    if (spectrum.empty()) throw ContractError("empty spectrum");
    auto s = shifted_sums(spectrum);
    double beta = s.even / s.pos;
    if (beta < 0.5 - 1e-9 || beta > 1.0 + 1e-9)
        throw std::runtime_error("beta outside [0.5, 1]");
    return std::clamp(beta, 0.5, 1.0);
}

double bs_bipartivity(std::span<const double> spectrum) {
    if (spectrum.empty()) throw ContractError("empty spectrum");
    auto s = shifted_sums(spectrum);
    double bs = s.neg / s.pos;
    if (bs <= 0.0 || bs > 1.0 + 1e-9)
        throw std::runtime_error("b_s outside (0, 1]");
    return std::min(bs, 1.0);
}

double beta_bipartivity(const SignedGraph& g, int node_cap) {
    return beta_bipartivity(spectrum_abs(g, node_cap));
}

double bs_bipartivity(const SignedGraph& g, int node_cap) {
    return bs_bipartivity(spectrum_abs(g, node_cap));
}

MeasureReport build_measures(const SignedGraph& g, const FrustrationResult& r,
                             bool with_spectral, int node_cap) {
    MeasureReport rep;
    rep.n = g.node_count();
    rep.m = g.edge_count();
    rep.m_minus = g.negative_edge_count();
    rep.density = density(rep.n, rep.m);
    rep.L_lower = r.lower_bound;
    rep.L_upper = r.upper_bound;
    rep.L_exact = r.exact;
    if (rep.m > 0) rep.F = normalized_frustration(r.upper_bound, rep.m);
    rep.H_lower = hamiltonian(r.lower_bound, rep.m);
    rep.H_upper = hamiltonian(r.upper_bound, rep.m);
    if (with_spectral && rep.n > 0 && rep.n <= node_cap) {
        auto spec = spectrum_abs(g, node_cap);
        rep.beta = beta_bipartivity(spec);
        rep.bs = bs_bipartivity(spec);
    }
    return rep;
}

} // namespace frustra
