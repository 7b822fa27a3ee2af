#pragma once

#include <string>

#include <json.hpp>

#include "frustra/appkits.hpp"
#include "frustra/graph.hpp"
#include "frustra/measures.hpp"
#include "frustra/nullmodel.hpp"
#include "frustra/solver.hpp"

namespace frustra {

inline constexpr const char* kToolVersion = "frustra 0.1.0";

using Json = nlohmann::ordered_json;

/// Reports keep a fixed key order so identical invocations serialize
/// byte-identically apart from the elapsed_seconds field.
Json measure_json(const MeasureReport& rep);
Json result_json(const FrustrationResult& r);
Json ensemble_json(const EnsembleStats& stats);
Json partition_json(const SignedGraph& g, const Colouring& colouring);

/// Full analysis report: input descriptor, measures, solve summary, optional
/// ensemble, labelled two-group partition, tool version, seed and timing.
Json analysis_json(const std::string& input, const SignedGraph& g, const FrustrationResult& r,
                   const SolverConfig& cfg, const EnsembleStats* stats = nullptr,
                   bool with_spectral = false);

std::string frame_csv_header();
std::string frame_csv_row(const FrameReport& rep);

} // namespace frustra
