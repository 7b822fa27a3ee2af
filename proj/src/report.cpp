#include "frustra/report.hpp"

#include <sstream>

namespace frustra {

Json measure_json(const MeasureReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["m_minus"] = rep.m_minus;
    j["density"] = rep.density;
    j["L"] = rep.L_exact ? Json(rep.L_upper) : Json{{"lower", rep.L_lower}, {"upper", rep.L_upper}};
    if (rep.F)
        j["F"] = *rep.F;
    else
        j["F"] = nullptr;
    j["H"] = rep.L_exact ? Json(rep.H_upper) : Json{{"lower", rep.H_lower}, {"upper", rep.H_upper}};
    if (rep.beta) j["beta"] = *rep.beta;
    if (rep.bs) j["b_s"] = *rep.bs;
    return j;
}

Json result_json(const FrustrationResult& r) {
    Json j;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["exact"] = r.exact;
    j["gap"] = r.gap();
    j["nodes_explored"] = r.nodes_explored;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

Json ensemble_json(const EnsembleStats& stats) {
    Json j;
    j["runs"] = stats.runs;
    j["mean"] = stats.mean;
    j["sd"] = stats.sd;
    if (stats.z_defined)
        j["z"] = stats.z;
    else
        j["z"] = nullptr;
    j["used_bounds"] = stats.used_bounds;
    j["observed"] = stats.observed;
    j["values"] = stats.values;
    return j;
}

Json partition_json(const SignedGraph& g, const Colouring& colouring) {
    Json groups;
    std::vector<std::string> a, b;
    for (int v = 0; v < g.node_count(); ++v)
        (colouring[v] ? a : b).push_back(g.label(v));
    groups["group_a"] = a;
    groups["group_b"] = b;
    Json frustrated = Json::array();
    for (const auto& e : g.edges())
        if (edge_frustrated(e.sign, colouring[e.u], colouring[e.v]))
            frustrated.push_back({g.label(e.u), g.label(e.v), e.sign});
    groups["frustrated_edges"] = frustrated;
    return groups;
}

Json analysis_json(const std::string& input, const SignedGraph& g, const FrustrationResult& r,
                   const SolverConfig& cfg, const EnsembleStats* stats, bool with_spectral) {
    Json j;
    j["version"] = kToolVersion;
    j["input"] = input;
    j["seed"] = cfg.seed;
    j["measures"] = measure_json(build_measures(g, r, with_spectral));
    j["result"] = result_json(r);
    if (stats) j["ensemble"] = ensemble_json(*stats);
    j["partition"] = partition_json(g, r.colouring);
    return j;
}

std::string frame_csv_header() { return "label,n,m,m_minus,L,F,state"; }

std::string frame_csv_row(const FrameReport& rep) {
    std::ostringstream os;
    if (!rep.error.empty()) {
        os << rep.label << ",,,,,,error: " << rep.error;
        return os.str();
    }
    os << rep.label << ',' << rep.n << ',' << rep.m << ',' << rep.m_minus << ',';
    if (rep.L_exact)
        os << rep.L_upper;
    else
        os << rep.L_lower << ".." << rep.L_upper;
    os << ',';
    if (rep.F) os << *rep.F;
    os << ',' << to_string(rep.state);
    return os.str();
}

} // namespace frustra
