// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Large public datasets that cannot be redistributed are looked up under the
// data directory and reported as SKIP with instructions when absent.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frustra/appkits.hpp"
#include "frustra/graph.hpp"
#include "frustra/measures.hpp"
#include "frustra/nullmodel.hpp"
#include "frustra/reduce.hpp"
#include "frustra/solver.hpp"

namespace fs = std::filesystem;
using namespace frustra;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* verdict, const std::string& msg, double secs) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", verdict, id, msg.c_str(), secs);
    std::fflush(stdout);
}

void run_criterion(int id, const std::function<std::pair<bool, std::string>()>& body) {
    auto t0 = Clock::now();
    bool ok = false;
    std::string msg;
    try {
        auto [o, m] = body();
        ok = o;
        msg = m;
    } catch (const std::exception& e) {
        msg = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!ok) ++failures;
    report(id, ok ? "PASS" : "FAIL", msg, secs);
}

fs::path data_dir() { return fs::path(FRUSTRA_DATA_DIR); }

bool have(const fs::path& p) { return fs::exists(p); }

SignedGraph rand_graph(int n, double p, double negfrac, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<SignedEdge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uni(rng) < p) edges.push_back({i, j, 1});
    int neg = static_cast<int>(std::llround(negfrac * edges.size()));
    for (int i = 0; i < neg; ++i) {
        std::uniform_int_distribution<int> pick(i, static_cast<int>(edges.size()) - 1);
        std::swap(edges[i], edges[pick(rng)]);
        edges[i].sign = -1;
    }
    return SignedGraph(n, std::move(edges));
}

SignedGraph random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SignedEdge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back({pick(rng), v, 1});
    }
    return SignedGraph(n, std::move(edges));
}

SignedGraph cycle(int n) {
    std::vector<SignedEdge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n), 1});
    return SignedGraph(n, std::move(edges));
}

// criterion 1 -------------------------------------------------------------

std::pair<bool, std::string> small_network_reproduction() {
    struct Fixture {
        const char* file;
        int n, m, m_minus, L;
    };
    const Fixture fixtures[] = {{"tribes.txt", 16, 58, 29, 7}, {"monastery.txt", 18, 49, 12, 5}};
    std::ostringstream msg;
    bool ok = true;
    for (const auto& f : fixtures) {
        fs::path path = data_dir() / f.file;
        if (!have(path)) return {false, std::string("missing fixture ") + f.file};
        SignedGraph g = parse_edge_list_file(path.string());
        if (g.node_count() != f.n || g.edge_count() != f.m || g.negative_edge_count() != f.m_minus)
            return {false, std::string(f.file) + " has wrong shape"};
        auto t0 = Clock::now();
        SolverConfig cfg;
        auto exact = solve_exact(g, cfg);
        auto brute = brute_force(g, 25);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool this_ok = exact.exact && exact.upper_bound == f.L && brute.upper_bound == f.L &&
                       secs < 1.0;
        ok = ok && this_ok;
        msg << f.file << " L=" << exact.upper_bound << " (want " << f.L << ", "
            << (secs < 1.0 ? "<1s" : "OVER 1s") << ") ";
    }
    return {ok, msg.str()};
}

// criterion 2 -------------------------------------------------------------

std::pair<bool, std::string> oracle_equivalence() {
    auto t0 = Clock::now();
    SolverConfig cfg;
    const double fracs[] = {0.25, 0.5, 0.75};
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        SignedGraph g = rand_graph(n, 0.4, fracs[seed % 3], 1000 + seed);
        auto exact = solve_exact(g, cfg);
        auto brute = brute_force(g, 25);
        if (!exact.exact || exact.upper_bound != brute.upper_bound)
            return {false, "mismatch at seed " + std::to_string(seed)};
        ++checked;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream msg;
    msg << checked << "/200 instances agree with brute force, " << (secs < 60 ? "within" : "OVER")
        << " 60s";
    return {secs < 60, msg.str()};
}

// criterion 3 -------------------------------------------------------------

std::pair<bool, std::string> null_model_statistics() {
    fs::path path = data_dir() / "tribes.txt";
    if (!have(path)) return {false, "missing fixture tribes.txt"};
    SignedGraph g = parse_edge_list_file(path.string());
    SolverConfig cfg;
    cfg.seed = 20260809;
    auto t0 = Clock::now();
    EnsembleStats stats = ensemble(g, 500, cfg);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = std::abs(stats.mean - 14.65) <= 0.25 && std::abs(stats.sd - 1.38) <= 0.35 &&
              stats.z_defined && std::abs(stats.z - (-5.54)) <= 0.6 && secs < 300;
    std::ostringstream msg;
    msg << "mean=" << stats.mean << " (14.65 +- 0.25), sd=" << stats.sd << " (1.38 +- 0.35), z="
        << stats.z << " (-5.54 +- 0.6)";
    return {ok, msg.str()};
}

// criterion 4 -------------------------------------------------------------

std::pair<bool, std::string> biological_networks() {
    struct Fixture {
        const char* file;
        int L;
    };
    const Fixture fixtures[] = {
        {"bio/yeast.txt", 41}, {"bio/macrophage.txt", 332}, {"bio/egfr.txt", 193},
        {"bio/ecoli.txt", 371}};
    bool any_present = false;
    bool ok = true;
    std::ostringstream msg;
    for (const auto& f : fixtures) {
        fs::path path = data_dir() / f.file;
        if (!have(path)) continue;
        any_present = true;
        SignedGraph g = parse_edge_list_file(path.string());
        SolverConfig cfg;
        cfg.time_limit = 1800.0;
        auto r = solve_exact(g, cfg);
        if (r.exact && r.upper_bound == f.L) {
            msg << f.file << " L=" << r.upper_bound << " exact; ";
        } else if (!r.exact && r.lower_bound <= f.L && f.L <= r.upper_bound && r.gap() <= 0.10) {
            msg << f.file << " degraded-pass bounds [" << r.lower_bound << "," << r.upper_bound
                << "]; ";
        } else {
            ok = false;
            msg << f.file << " FAILED bounds [" << r.lower_bound << "," << r.upper_bound
                << "] vs " << f.L << "; ";
        }
    }
    if (!any_present) {
        report(4, "SKIP",
               "biological datasets not bundled (licensing); place the published edge lists "
               "under data/bio/{yeast,macrophage,egfr,ecoli}.txt to enable",
               0.0);
        return {true, "skipped"};
    }
    return {ok, msg.str()};
}

// criterion 5 -------------------------------------------------------------

std::pair<bool, std::string> ising_statistics() {
    auto t0 = Clock::now();
    SolverConfig cfg;
    auto mean_L = [&](IsingSpec base, int runs) {
        double sum = 0;
        for (int i = 0; i < runs; ++i) {
            IsingSpec spec = base;
            spec.seed = 1 + static_cast<std::uint64_t>(i);
            auto r = solve_exact(ising_generate(spec), cfg);
            if (!r.exact) throw std::runtime_error("instance not solved to optimality");
            sum += r.upper_bound;
        }
        return sum / runs;
    };
    double grid_mean = mean_L({3, 5, 0.5, 0}, 10);
    double cube_mean = mean_L({4, std::nullopt, 0.5, 0}, 10);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool ok = std::abs(grid_mean - 52.4) <= 3 * 2.5 && std::abs(cube_mean - 4.8) <= 3 * 1.0 &&
              secs < 600;
    std::ostringstream msg;
    msg << "3d s=5 mean L=" << grid_mean << " (52.4 +- 7.5), hypercube d=4 mean L=" << cube_mean
        << " (4.8 +- 3)";
    return {ok, msg.str()};
}

// criterion 6 -------------------------------------------------------------

std::pair<bool, std::string> generator_shapes() {
    struct GridCase {
        int d, s, n, m;
    };
    const GridCase grids[] = {{2, 50, 2500, 4900}, {3, 10, 1000, 2700}};
    for (const auto& c : grids) {
        SignedGraph g = ising_generate({c.d, c.s, 0.0, 0});
        if (g.node_count() != c.n || g.edge_count() != c.m)
            return {false, "grid shape mismatch"};
    }
    const int hyper_n[] = {16, 32, 64, 128, 256};
    const int hyper_m[] = {32, 80, 192, 448, 1024};
    for (int d = 4; d <= 8; ++d) {
        SignedGraph g = ising_generate({d, std::nullopt, 0.0, 0});
        if (g.node_count() != hyper_n[d - 4] || g.edge_count() != hyper_m[d - 4])
            return {false, "hypercube shape mismatch"};
    }
    return {true, "grid and hypercube closed forms hold"};
}

// criterion 7 -------------------------------------------------------------

std::pair<bool, std::string> bipartivity_identities() {
    SolverConfig cfg;
    for (std::uint64_t i = 0; i < 50; ++i) {
        SignedGraph t = random_tree(3 + static_cast<int>(i % 38), i);
        auto r = bipartite_edge_frustration(t, cfg);
        if (r.upper_bound != 0) return {false, "tree with nonzero L"};
        if (std::abs(normalized_frustration(0, t.edge_count()) - 1.0) > 0)
            return {false, "tree with F != 1"};
        if (std::abs(beta_bipartivity(t) - 1.0) > 1e-9 || std::abs(bs_bipartivity(t) - 1.0) > 1e-9)
            return {false, "tree spectral bipartivity != 1"};
    }
    for (std::uint64_t i = 0; i < 50; ++i) {
        SignedGraph c = cycle(4 + 2 * static_cast<int>(i));
        auto r = bipartite_edge_frustration(c, cfg);
        if (r.upper_bound != 0) return {false, "even cycle with nonzero L"};
        if (std::abs(beta_bipartivity(c) - 1.0) > 1e-9 || std::abs(bs_bipartivity(c) - 1.0) > 1e-9)
            return {false, "even cycle spectral bipartivity != 1"};
    }
    if (bipartite_edge_frustration(cycle(5), cfg).upper_bound != 1)
        return {false, "C5 bipartization != 1"};

    fs::path c180 = data_dir() / "fullerene" / "C180.txt";
    fs::path c240 = data_dir() / "fullerene" / "C240.txt";
    std::ostringstream msg;
    msg << "trees/even cycles/C5 identities hold";
    if (have(c180) && have(c240)) {
        SignedGraph g180 = parse_edge_list_file(c180.string());
        if (g180.edge_count() != 270) return {false, "C180 has wrong edge count"};
        auto r180 = bipartite_edge_frustration(g180, cfg);
        double F = normalized_frustration(r180.upper_bound, 270);
        double beta = beta_bipartivity(g180);
        double bs = bs_bipartivity(g180);
        bool ok180 = r180.exact && r180.upper_bound == 18 && std::abs(F - 0.86667) <= 1e-5 &&
                     std::abs(beta - 0.99765) <= 1e-4 && std::abs(bs - 0.99529) <= 1e-4;
        SignedGraph g240 = parse_edge_list_file(c240.string());
        auto r240 = bipartite_edge_frustration(g240, cfg);
        bool ok240 = r240.exact && r240.upper_bound == 24;
        msg << "; C180 row (L=" << r180.upper_bound << ", F=" << F << ", beta=" << beta
            << ", b_s=" << bs << "), C240 L=" << r240.upper_bound;
        if (!(ok180 && ok240)) return {false, msg.str()};
    } else {
        report(7, "SKIP", "fullerene files not found under data/fullerene; sub-check skipped", 0.0);
    }
    return {true, msg.str()};
}

// criterion 8 -------------------------------------------------------------

std::pair<bool, std::string> invariant_suite() {
    SolverConfig cfg;
    std::vector<SignedGraph> instances;
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        instances.push_back(rand_graph(5 + static_cast<int>(seed % 8), 0.45, 0.5, 7000 + seed));
    for (const char* f : {"tribes.txt", "monastery.txt"}) {
        fs::path p = data_dir() / f;
        if (have(p)) instances.push_back(parse_edge_list_file(p.string()));
    }

    std::mt19937_64 rng(4242);
    for (const auto& g : instances) {
        auto r = solve_exact(g, cfg);
        if (!r.exact) return {false, "instance not solved exactly"};
        int L = r.upper_bound;
        if (L > g.negative_edge_count() || L > g.edge_count() / 2)
            return {false, "L exceeds min(m-, m/2)"};
        if ((L == 0) != is_balanced(g).balanced) return {false, "L=0 <-> balance violated"};
        long long H = hamiltonian(L, g.edge_count());
        if (H + g.edge_count() != 2ll * L) return {false, "H identity violated"};

        if (g.node_count() <= 16) {
            for (int t = 0; t < 20; ++t) {
                std::vector<std::uint8_t> s(g.node_count());
                for (auto& b : s) b = rng() & 1;
                if (solve_exact(switch_signs(g, s), cfg).upper_bound != L)
                    return {false, "switching changed the optimum"};
            }
            Colouring x(g.node_count());
            for (auto& b : x) b = rng() & 1;
            if (frustration_count(g, x) != frustration_count(g, complement(x)))
                return {false, "complement symmetry violated"};
        }
    }

    // additivity over a disjoint union
    {
        SignedGraph a = rand_graph(9, 0.5, 0.5, 31);
        SignedGraph b = rand_graph(8, 0.5, 0.25, 32);
        std::vector<SignedEdge> edges(a.edges().begin(), a.edges().end());
        for (const auto& e : b.edges()) edges.push_back({e.u + 9, e.v + 9, e.sign});
        SignedGraph whole(17, std::move(edges));
        if (solve_exact(whole, cfg).upper_bound !=
            solve_exact(a, cfg).upper_bound + solve_exact(b, cfg).upper_bound)
            return {false, "additivity violated"};
    }

    // gap-mode smoke test on a synthetic 10^4-edge instance via the CLI
    {
        SignedGraph big = ising_generate({2, 75, 0.5, 99});
        fs::path tmp = fs::temp_directory_path() / "frustra_accept_big.txt";
        std::ofstream out(tmp);
        serialize_edge_list(big, out);
        out.close();
        fs::path json_path = fs::temp_directory_path() / "frustra_accept_big.json";
        std::string cmd = std::string(FRUSTRA_CLI_PATH) + " analyze --gap 0.15 --time-limit 20 --out " +
                          json_path.string() + " " + tmp.string() + " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        if (code != 2) return {false, "gap-mode CLI run expected exit 2, got " + std::to_string(code)};
        std::ifstream jin(json_path);
        auto j = nlohmann::json::parse(jin);
        int lo = j["result"]["lower_bound"], up = j["result"]["upper_bound"];
        if (!(0 <= lo && lo <= up && up <= big.edge_count()))
            return {false, "gap-mode bounds out of order"};
    }

    return {true, "bounds, balance, switching, additivity, complement, Hamiltonian and "
                  "gap-mode smoke checks hold"};
}

} // namespace

int main() {
    std::printf("frustra acceptance suite (data: %s)\n", FRUSTRA_DATA_DIR);
    run_criterion(1, small_network_reproduction);
    run_criterion(2, oracle_equivalence);
    run_criterion(3, null_model_statistics);
    run_criterion(4, biological_networks);
    run_criterion(5, ising_statistics);
    run_criterion(6, generator_shapes);
    run_criterion(7, bipartivity_identities);
    run_criterion(8, invariant_suite);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
