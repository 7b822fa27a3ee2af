#include "frustra/appkits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "frustra/errors.hpp"
#include "frustra/measures.hpp"

namespace frustra {

const char* to_string(FrameState s) {
    switch (s) {
        case FrameState::all_positive: return "all_positive";
        case FrameState::balanced: return "balanced";
        case FrameState::unbalanced: return "unbalanced";
    }
    return "?";
}

FrameState classify_frame(int m_minus, int L) {
    if (m_minus == 0) return FrameState::all_positive;
    return L == 0 ? FrameState::balanced : FrameState::unbalanced;
}

namespace {

FrameReport solve_frame(const LabelledGraph& frame, const SolverConfig& cfg) {
    FrameReport rep;
    rep.label = frame.label;
    rep.n = frame.graph.node_count();
    rep.m = frame.graph.edge_count();
    rep.m_minus = frame.graph.negative_edge_count();
    rep.node_labels = frame.graph.labels();
    try {
        FrustrationResult r = solve_exact(frame.graph, cfg);
        rep.L_lower = r.lower_bound;
        rep.L_upper = r.upper_bound;
        rep.L_exact = r.exact;
        if (rep.m > 0) rep.F = normalized_frustration(r.upper_bound, rep.m);
        rep.state = classify_frame(rep.m_minus, r.upper_bound);
        rep.partition = std::move(r.colouring);
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    return rep;
}

} // namespace

std::vector<FrameReport> temporal_series(const std::vector<LabelledGraph>& frames,
                                         const SolverConfig& cfg) {
    if (frames.empty()) throw ContractError("temporal series needs at least one frame");
    std::vector<FrameReport> reports(frames.size());
    const int count = static_cast<int>(frames.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) reports[i] = solve_frame(frames[i], cfg);
    return reports;
}

std::vector<FrameReport> temporal_series_serial(const std::vector<LabelledGraph>& frames,
                                                const SolverConfig& cfg) {
    if (frames.empty()) throw ContractError("temporal series needs at least one frame");
    std::vector<FrameReport> reports(frames.size());
    for (std::size_t i = 0; i < frames.size(); ++i) reports[i] = solve_frame(frames[i], cfg);
    return reports;
}

std::vector<LabelledGraph> load_frames_manifest(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw ParseError("cannot open manifest " + manifest_path);
    std::vector<LabelledGraph> frames;
    std::string line;
    int lineno = 0;
    auto base = std::filesystem::path(manifest_path).parent_path();
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string label, path;
        if (!(ls >> label)) continue;
        if (!(ls >> path))
            throw ParseError(manifest_path + " line " + std::to_string(lineno) +
                             ": expected `<label> <path>`");
        auto full = std::filesystem::path(path);
        if (full.is_relative()) full = base / full;
        frames.push_back({label, parse_edge_list_file(full.string())});
    }
    return frames;
}

std::vector<LabelledGraph> load_frames_directory(const std::string& dir_path) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir_path))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<LabelledGraph> frames;
    for (const auto& f : files)
        frames.push_back({f.stem().string(), parse_edge_list_file(f.string())});
    return frames;
}

std::vector<NodeStability> partition_stability(const std::vector<FrameReport>& reports) {
    std::unordered_map<std::string, std::array<int, 2>> side_counts;
    std::vector<std::string> order; // first-appearance order of labels
    std::unordered_map<std::string, std::uint8_t> prev;

    for (const auto& rep : reports) {
        if (!rep.error.empty()) continue;
        // complement the frame when that matches more shared labels
        int match = 0, common = 0;
        for (std::size_t i = 0; i < rep.node_labels.size(); ++i) {
            auto it = prev.find(rep.node_labels[i]);
            if (it == prev.end()) continue;
            ++common;
            match += it->second == rep.partition[i];
        }
        const int flip = (common - match > match) ? 1 : 0;

        prev.clear();
        for (std::size_t i = 0; i < rep.node_labels.size(); ++i) {
            std::uint8_t side = rep.partition[i] ^ flip;
            auto [it, inserted] = side_counts.try_emplace(rep.node_labels[i]);
            if (inserted) order.push_back(rep.node_labels[i]);
            ++it->second[side];
            prev[rep.node_labels[i]] = side;
        }
    }

    std::vector<NodeStability> out;
    out.reserve(order.size());
    for (const auto& label : order) {
        const auto& sc = side_counts[label];
        out.push_back({label, sc[0] + sc[1], std::max(sc[0], sc[1])});
    }
    return out;
}

CorrelationMatrix parse_correlation_csv(std::istream& in) {
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            // trim surrounding whitespace
            auto b = cell.find_first_not_of(" \t\r");
            auto e = cell.find_last_not_of(" \t\r");
            cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
        }
        if (!line.empty() && line.back() == ',') cells.push_back("");
        return cells;
    };

    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty correlation CSV");
    auto header = split(line);
    if (header.size() < 2) throw ParseError("correlation CSV header needs at least one label");
    CorrelationMatrix c;
    c.labels.assign(header.begin() + 1, header.end());
    const std::size_t n = c.labels.size();
    c.values.assign(n * n, 0.0);

    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        auto cells = split(line);
        if (row >= n) throw ParseError("correlation CSV has more rows than labels");
        if (cells.size() != n + 1)
            throw ParseError("correlation CSV row " + std::to_string(row + 2) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(n + 1));
        if (cells[0] != c.labels[row])
            throw ParseError("correlation CSV row label `" + cells[0] + "` does not match header `" +
                             c.labels[row] + "`");
        for (std::size_t j = 0; j < n; ++j) {
            if (cells[j + 1].empty())
                throw ParseError("correlation CSV has a missing value at (" + c.labels[row] + ", " +
                                 c.labels[j] + ")");
            try {
                c.values[row * n + j] = std::stod(cells[j + 1]);
            } catch (const std::exception&) {
                throw ParseError("correlation CSV has a non-numeric cell `" + cells[j + 1] + "`");
            }
        }
        ++row;
    }
    if (row != n) throw ParseError("correlation CSV has fewer rows than labels");
    return c;
}

CorrelationMatrix parse_correlation_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return parse_correlation_csv(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

SignedGraph portfolio_graph(const CorrelationMatrix& c, double threshold) {
    const int n = static_cast<int>(c.labels.size());
    if (!(threshold > 0.0 && threshold < 1.0)) throw ContractError("threshold must be in (0,1)");
    for (int i = 0; i < n; ++i) {
        if (std::abs(c.at(i, i) - 1.0) > 1e-9)
            throw ParseError("correlation matrix diagonal entry for " + c.labels[i] + " is not 1");
        for (int j = 0; j < n; ++j) {
            if (c.at(i, j) < -1.0 - 1e-9 || c.at(i, j) > 1.0 + 1e-9)
                throw ParseError("correlation out of [-1,1] at (" + c.labels[i] + ", " + c.labels[j] + ")");
            if (std::abs(c.at(i, j) - c.at(j, i)) > 1e-9)
                throw ParseError("correlation matrix is not symmetric at (" + c.labels[i] + ", " +
                                 c.labels[j] + ")");
        }
    }
    std::vector<SignedEdge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(c.at(i, j)) > threshold)
                edges.push_back({i, j, c.at(i, j) > 0 ? 1 : -1});
    return SignedGraph(n, std::move(edges), c.labels);
}

FrustrationResult bipartite_edge_frustration(const SignedGraph& g_unsigned,
                                             const SolverConfig& cfg) {
    if (g_unsigned.negative_edge_count() != 0)
        throw ContractError("bipartite edge frustration expects an all-positive (unsigned) graph");
    std::vector<SignedEdge> edges(g_unsigned.edges().begin(), g_unsigned.edges().end());
    for (auto& e : edges) e.sign = -1;
    SignedGraph all_negative(g_unsigned.node_count(), std::move(edges), g_unsigned.labels());
    return solve_exact(all_negative, cfg);
}

SignedGraph ising_generate(const IsingSpec& spec, long long node_cap) {
    if (spec.dimension < 1) throw ContractError("dimension must be >= 1");
    if (spec.side && *spec.side < 2) throw ContractError("grid side must be >= 2");
    if (spec.negative_fraction < 0.0 || spec.negative_fraction > 1.0)
        throw ContractError("negative fraction must be in [0,1]");

    long long n = 1;
    std::vector<SignedEdge> edges;
    if (spec.side) {
        const int d = spec.dimension, s = *spec.side;
        for (int k = 0; k < d; ++k) {
            n *= s;
            if (n > node_cap) throw ContractError("grid size exceeds node cap");
        }
        // open boundaries: an edge along axis k whenever that coordinate is not maximal
        std::vector<long long> stride(d, 1);
        for (int k = 1; k < d; ++k) stride[k] = stride[k - 1] * s;
        for (long long id = 0; id < n; ++id) {
            long long rest = id;
            for (int k = 0; k < d; ++k) {
                long long coord = rest % s;
                rest /= s;
                if (coord + 1 < s)
                    edges.push_back({static_cast<int>(id), static_cast<int>(id + stride[k]), 1});
            }
        }
    } else {
        const int d = spec.dimension;
        if (d > 25) throw ContractError("hypercube dimension exceeds node cap");
        n = 1ll << d;
        if (n > node_cap) throw ContractError("hypercube size exceeds node cap");
        for (long long i = 0; i < n; ++i)
            for (int b = 0; b < d; ++b)
                if (!(i & (1ll << b)))
                    edges.push_back({static_cast<int>(i), static_cast<int>(i | (1ll << b)), 1});
    }

    const long long m = static_cast<long long>(edges.size());
    const long long negatives = std::llround(spec.negative_fraction * static_cast<double>(m));
    std::mt19937_64 rng(spec.seed);
    std::vector<long long> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (long long i = 0; i < negatives; ++i) {
        std::uniform_int_distribution<long long> pick(i, m - 1);
        std::swap(idx[i], idx[pick(rng)]);
        edges[idx[i]].sign = -1;
    }
    return SignedGraph(static_cast<int>(n), std::move(edges));
}

} // namespace frustra
