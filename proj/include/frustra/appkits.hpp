#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frustra/graph.hpp"
#include "frustra/solver.hpp"

namespace frustra {

enum class FrameState { all_positive, balanced, unbalanced };

const char* to_string(FrameState s);

/// Per-time-frame balance record. all_positive <=> m^- = 0; balanced <=>
/// m^- > 0 and L = 0; unbalanced otherwise.
struct FrameReport {
    std::string label;
    int n = 0;
    int m = 0;
    int m_minus = 0;
    int L_lower = 0;
    int L_upper = 0;
    bool L_exact = false;
    std::optional<double> F;
    FrameState state = FrameState::all_positive;
    Colouring partition;
    std::vector<std::string> node_labels; // aligned with partition
    std::string error;                    // per-frame failure, recorded not fatal
};

FrameState classify_frame(int m_minus, int L);

struct LabelledGraph {
    std::string label;
    SignedGraph graph;
};

/// Solves each frame and assembles reports; frames run across OpenMP threads,
/// output order follows input order.
std::vector<FrameReport> temporal_series(const std::vector<LabelledGraph>& frames,
                                         const SolverConfig& cfg);
/// Single-threaded reference with identical output.
std::vector<FrameReport> temporal_series_serial(const std::vector<LabelledGraph>& frames,
                                                const SolverConfig& cfg);

/// `label path` lines; '#' comments and blank lines ignored.
std::vector<LabelledGraph> load_frames_manifest(const std::string& manifest_path);
/// Every regular file in the directory, ordered lexicographically by filename.
std::vector<LabelledGraph> load_frames_directory(const std::string& dir_path);

struct NodeStability {
    std::string label;
    int frames_present = 0;
    int frames_majority_side = 0;
};

/// Aligns each frame's two groups with the previous frame by complementing
/// when that increases label overlap (ties keep the identity orientation),
/// then counts per-label side membership.
std::vector<NodeStability> partition_stability(const std::vector<FrameReport>& reports);

struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<double> values; // row-major n x n

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * labels.size() + j]; }
};

/// First row and column carry security labels; cells are return correlations.
CorrelationMatrix parse_correlation_csv(std::istream& in);
CorrelationMatrix parse_correlation_csv_file(const std::string& path);

/// Edge (i,j) with the correlation's sign iff |c_ij| > threshold.
/// Validates symmetry (1e-9), unit diagonal, entries in [-1,1], t in (0,1).
SignedGraph portfolio_graph(const CorrelationMatrix& c, double threshold);

/// Minimum edges whose removal makes the (unsigned) graph bipartite: the
/// frustration index of the all-negative signing. Input must be all-positive.
FrustrationResult bipartite_edge_frustration(const SignedGraph& g_unsigned,
                                             const SolverConfig& cfg = {});

/// Open d-dimensional grid lattice (side >= 2) or hypercube (side unset),
/// with round(q*m) negative edges sampled without replacement per seed.
struct IsingSpec {
    int dimension = 2;
    std::optional<int> side; // unset = hypercube of `dimension`
    double negative_fraction = 0.5;
    std::uint64_t seed = 0;
};

SignedGraph ising_generate(const IsingSpec& spec, long long node_cap = 1'000'000);

} // namespace frustra
