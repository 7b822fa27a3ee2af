#include "frustra/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <random>
#include <stdexcept>
#include <utility>

#include "frustra/errors.hpp"
#include "frustra/reduce.hpp"

namespace frustra {

namespace {

using Clock = std::chrono::steady_clock;

void check_solution_invariants(const SignedGraph& g, const FrustrationResult& r) {
    const int m = g.edge_count();
    if (r.lower_bound < 0 || r.lower_bound > r.upper_bound || r.upper_bound > m)
        throw std::logic_error("solver produced unordered bounds");
    if (r.upper_bound > g.negative_edge_count() || r.upper_bound > m / 2)
        throw std::logic_error("solver exceeded the m^- or m/2 bound");
    if (frustration_count(g, r.colouring) != r.upper_bound)
        throw std::logic_error("solver colouring does not match its upper bound");
}

// --- negative cycle packing ------------------------------------------------

struct PackedCycle {
    std::vector<int> nodes;
};

// Greedy edge-disjoint negative triangles, then negative cycles of length
// 4..5 on the remaining edges. `assigned` (optional) restricts the packing to
// edges whose endpoints are all unassigned (< 0 entries).
std::vector<PackedCycle> pack_negative_cycles(const SignedGraph& g,
                                              const std::vector<signed char>* assigned) {
    const int n = g.node_count();
    const int m = g.edge_count();
    std::vector<PackedCycle> cycles;
    std::vector<char> used(m, 0);

    auto free_node = [&](int v) { return assigned == nullptr || (*assigned)[v] < 0; };

    // incidence with edge indices
    std::vector<std::vector<std::array<int, 3>>> inc(n); // (other, sign, edge index)
    for (int ei = 0; ei < m; ++ei) {
        const auto& e = g.edges()[ei];
        if (!free_node(e.u) || !free_node(e.v)) continue;
        inc[e.u].push_back({e.v, e.sign, ei});
        inc[e.v].push_back({e.u, e.sign, ei});
    }

    // negative triangles
    std::vector<std::array<int, 2>> cand(n, {-1, 0}); // (edge index via u, sign), -1 = unset
    for (int ei = 0; ei < m; ++ei) {
        if (used[ei]) continue;
        const auto& e = g.edges()[ei];
        if (!free_node(e.u) || !free_node(e.v)) continue;
        for (const auto& [w, s2, ej] : inc[e.u])
            if (!used[ej] && w != e.v) cand[w] = {ej, s2};
        bool taken = false;
        for (const auto& [w, s3, ek] : inc[e.v]) {
            if (used[ek] || w == e.u || cand[w][0] < 0) continue;
            if (used[cand[w][0]]) continue;
            if (e.sign * cand[w][1] * s3 < 0) {
                used[ei] = used[ek] = 1;
                used[cand[w][0]] = 1;
                cycles.push_back({{e.u, e.v, w}});
                taken = true;
                break;
            }
        }
        for (const auto& [w, s2, ej] : inc[e.u]) {
            (void)s2;
            (void)ej;
            cand[w] = {-1, 0};
        }
        if (taken) continue;
    }

    // negative cycles of length 4..5: shortest path u..v of parity opposite
    // to the closing edge, over unused edges, at most 4 hops
    struct State {
        int node;
        int parity; // 0 = positive product so far, 1 = negative
    };
    std::vector<std::array<int, 2>> dist(n), par_edge(n), par_node(n);
    for (int ei = 0; ei < m; ++ei) {
        if (used[ei]) continue;
        const auto& e = g.edges()[ei];
        if (!free_node(e.u) || !free_node(e.v)) continue;
        const int want = e.sign > 0 ? 1 : 0; // path parity making the cycle negative

        for (int v = 0; v < n; ++v) dist[v] = {-1, -1};
        std::vector<State> queue{{e.u, 0}};
        dist[e.u][0] = 0;
        par_edge[e.u][0] = -1;
        bool found = false;
        for (std::size_t qi = 0; qi < queue.size() && !found; ++qi) {
            auto [x, p] = queue[qi];
            int d = dist[x][p];
            if (d == 4) continue;
            for (const auto& [y, s, ej] : inc[x]) {
                if (used[ej] || ej == ei) continue;
                int np = p ^ (s < 0 ? 1 : 0);
                if (dist[y][np] != -1) continue;
                dist[y][np] = d + 1;
                par_edge[y][np] = ej;
                par_node[y][np] = x;
                if (y == e.v && np == want && d + 1 >= 2) {
                    found = true;
                    break;
                }
                queue.push_back({y, np});
            }
        }
        if (!found) continue;

        // walk parents; the edge set must be duplicate-free for soundness
        std::vector<int> path_edges, nodes{e.u, e.v};
        int x = e.v, p = want;
        while (par_edge[x][p] != -1) {
            int ej = par_edge[x][p];
            int px = par_node[x][p];
            path_edges.push_back(ej);
            nodes.push_back(x);
            p ^= (g.edges()[ej].sign < 0 ? 1 : 0);
            x = px;
        }
        std::vector<int> sorted = path_edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

        used[ei] = 1;
        for (int ej : path_edges) used[ej] = 1;
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        cycles.push_back({std::move(nodes)});
    }

    return cycles;
}

// --- steepest descent ------------------------------------------------------

// Flips the best-gain node until no flip improves; gain bookkeeping is O(deg)
// per flip. Returns the reached frustration count.
int steepest_descent(const SignedGraph& g, Colouring& c) {
    const int n = g.node_count();
    int count = frustration_count(g, c);
    // gain[v] = reduction of the count when v flips
    std::vector<int> gain(n, 0);
    for (const auto& e : g.edges()) {
        int f = edge_frustrated(e.sign, c[e.u], c[e.v]) ? 1 : -1;
        gain[e.u] += f;
        gain[e.v] += f;
    }
    while (true) {
        int best = -1, best_gain = 0;
        for (int v = 0; v < n; ++v)
            if (gain[v] > best_gain) {
                best_gain = gain[v];
                best = v;
            }
        if (best < 0) break;
        c[best] ^= 1;
        count -= best_gain;
        gain[best] = -gain[best];
        for (auto [u, s] : g.neighbours(best))
            gain[u] += edge_frustrated(s, c[best], c[u]) ? 2 : -2;
    }
    return count;
}

// --- branch and bound on one block ----------------------------------------

struct BlockOutcome {
    int lower = 0;
    int upper = 0;
    Colouring colouring;
    bool proven = false;
    std::uint64_t nodes = 0;
};

class BlockSearch {
public:
    BlockSearch(const SignedGraph& g, Colouring incumbent, int incumbent_value,
                std::optional<Clock::time_point> deadline)
        : g_(g),
          n_(g.node_count()),
          deadline_(deadline),
          large_block_(g.edge_count() > 1500),
          best_colouring_(std::move(incumbent)),
          best_(incumbent_value) {
        colour_.assign(n_, -1);
        attach_.assign(n_, {0, 0});
        cycles_at_.assign(n_, {});
    }

    BlockOutcome run() {
        root_pack_ = refresh_pack();
        if (n_ > 0 && root_pack_ < best_) {
            int root = pick_branch_node();
            assign(root, 0);
            dfs(1);
            unassign(root, 0);
        }
        BlockOutcome out;
        out.upper = best_;
        out.colouring = std::move(best_colouring_);
        out.proven = !aborted_;
        out.lower = out.proven ? best_ : std::min(root_pack_, best_);
        out.nodes = nodes_;
        return out;
    }

private:
    void dfs(int depth) {
        if (aborted_) return;
        ++nodes_;
        if (deadline_ && (nodes_ & 0xFFF) == 0 && Clock::now() > *deadline_) {
            aborted_ = true;
            return;
        }
        if (assigned_count_ == n_) {
            if (forced_ < best_) {
                best_ = forced_;
                for (int v = 0; v < n_; ++v)
                    best_colouring_[v] = static_cast<std::uint8_t>(colour_[v]);
            }
            return;
        }
        if (forced_ + attach_min_sum_ + pack_alive_ >= best_) return;
        // Packing refresh is O(m^2) worst case, so large blocks refresh on a
        // longer stride than the small-instance depth<10 / every-64 schedule.
        bool due = large_block_ ? nodes_ - last_refresh_ >= 4096
                                : depth < 10 || nodes_ - last_refresh_ >= 64;
        if (due) {
            refresh_pack();
            if (forced_ + attach_min_sum_ + pack_alive_ >= best_) return;
        }

        int v = pick_branch_node();
        int first = attach_[v][0] <= attach_[v][1] ? 0 : 1;
        for (int k = 0; k < 2; ++k) {
            int c = k == 0 ? first : 1 - first;
            assign(v, c);
            dfs(depth + 1);
            unassign(v, c);
            if (aborted_) return;
        }
    }

    // Max edges to assigned nodes, then max degree, then min id.
    int pick_branch_node() const {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            int conn = attach_[v][0] + attach_[v][1];
            int deg = g_.degree(v);
            if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(int v, int c) {
        colour_[v] = static_cast<signed char>(c);
        ++assigned_count_;
        attach_min_sum_ -= std::min(attach_[v][0], attach_[v][1]);
        for (auto [u, s] : g_.neighbours(v)) {
            if (colour_[u] >= 0) {
                forced_ += edge_frustrated(s, static_cast<std::uint8_t>(c),
                                           static_cast<std::uint8_t>(colour_[u]));
            } else {
                int frustrated_choice = s > 0 ? 1 - c : c;
                int old = std::min(attach_[u][0], attach_[u][1]);
                ++attach_[u][frustrated_choice];
                attach_min_sum_ += std::min(attach_[u][0], attach_[u][1]) - old;
            }
        }
        for (int ci : cycles_at_[v])
            if (cycle_assigned_[ci]++ == 0) --pack_alive_;
    }

    void unassign(int v, int c) {
        for (int ci : cycles_at_[v])
            if (--cycle_assigned_[ci] == 0) ++pack_alive_;
        for (auto [u, s] : g_.neighbours(v)) {
            if (colour_[u] >= 0) {
                forced_ -= edge_frustrated(s, static_cast<std::uint8_t>(c),
                                           static_cast<std::uint8_t>(colour_[u]));
            } else {
                int frustrated_choice = s > 0 ? 1 - c : c;
                int old = std::min(attach_[u][0], attach_[u][1]);
                --attach_[u][frustrated_choice];
                attach_min_sum_ += std::min(attach_[u][0], attach_[u][1]) - old;
            }
        }
        --assigned_count_;
        attach_min_sum_ += std::min(attach_[v][0], attach_[v][1]);
        colour_[v] = -1;
    }

    int refresh_pack() {
        auto cycles = pack_negative_cycles(g_, &colour_);
        for (auto& lst : cycles_at_) lst.clear();
        cycle_assigned_.assign(cycles.size(), 0);
        for (std::size_t ci = 0; ci < cycles.size(); ++ci)
            for (int v : cycles[ci].nodes) cycles_at_[v].push_back(static_cast<int>(ci));
        pack_alive_ = static_cast<int>(cycles.size());
        last_refresh_ = nodes_;
        return pack_alive_;
    }

    const SignedGraph& g_;
    int n_;
    std::optional<Clock::time_point> deadline_;
    bool large_block_;

    std::vector<signed char> colour_;
    std::vector<std::array<int, 2>> attach_;
    int forced_ = 0;
    int attach_min_sum_ = 0;
    int assigned_count_ = 0;

    std::vector<std::vector<int>> cycles_at_;
    std::vector<int> cycle_assigned_;
    int pack_alive_ = 0;
    std::uint64_t last_refresh_ = 0;
    int root_pack_ = 0;

    Colouring best_colouring_;
    int best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace

FrustrationResult brute_force(const SignedGraph& g, int node_cap) {
    const int n = g.node_count();
    if (n > node_cap)
        throw ContractError("brute_force refuses n=" + std::to_string(n) + " > cap " +
                            std::to_string(node_cap) + "; use solve_exact");
    auto t0 = Clock::now();
    FrustrationResult res;
    res.colouring.assign(n, 0);
    if (n == 0) {
        res.exact = true;
        return res;
    }

    Colouring c(n, 0);
    int count = 0;
    for (const auto& e : g.edges()) count += e.sign < 0;
    int best = count;
    std::uint64_t best_code = 0;

    // Gray-code walk over the 2^(n-1) colourings with node 0 fixed white.
    const std::uint64_t total = 1ull << (n - 1);
    for (std::uint64_t t = 1; t < total; ++t) {
        int v = std::countr_zero(t) + 1;
        int frustrated_at_v = 0;
        for (auto [u, s] : g.neighbours(v))
            frustrated_at_v += edge_frustrated(s, c[v], c[u]);
        count += g.degree(v) - 2 * frustrated_at_v;
        c[v] ^= 1;
        if (count < best) {
            best = count;
            best_code = t ^ (t >> 1);
        }
    }

    for (int v = 1; v < n; ++v)
        res.colouring[v] = static_cast<std::uint8_t>((best_code >> (v - 1)) & 1);
    res.lower_bound = res.upper_bound = best;
    res.exact = true;
    res.nodes_explored = total;
    res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    check_solution_invariants(g, res);
    return res;
}

int lower_bound_pack(const SignedGraph& g) {
    return static_cast<int>(pack_negative_cycles(g, nullptr).size());
}

FrustrationResult local_search(const SignedGraph& g, const SolverConfig& cfg) {
    if (cfg.heuristic_restarts < 1) throw ContractError("heuristic_restarts must be >= 1");
    auto t0 = Clock::now();
    const int n = g.node_count();

    FrustrationResult res;
    res.colouring.assign(n, 0);
    res.upper_bound = g.edge_count() + 1;
    std::mt19937_64 rng(cfg.seed);

    for (int r = 0; r < cfg.heuristic_restarts; ++r) {
        Colouring c(n, 0);
        if (r > 0)
            for (int v = 0; v < n; ++v) c[v] = static_cast<std::uint8_t>(rng() & 1);
        int reached = steepest_descent(g, c);
        if (reached < res.upper_bound) {
            res.upper_bound = reached;
            res.colouring = c;
            if (reached == 0) break;
        }
    }

    res.lower_bound = lower_bound_pack(g);
    res.exact = res.lower_bound == res.upper_bound;
    res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    check_solution_invariants(g, res);
    return res;
}

FrustrationResult solve_exact(const SignedGraph& g, const SolverConfig& cfg) {
    if (cfg.target_gap < 0.0 || cfg.target_gap > 1.0)
        throw ContractError("target_gap must be in [0,1]");
    if (cfg.heuristic_restarts < 1) throw ContractError("heuristic_restarts must be >= 1");
    auto t0 = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (cfg.time_limit)
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*cfg.time_limit));

    FrustrationResult res;
    ReducedInstance red = reduce(g);

    // Nontrivial biconnected blocks are solved independently; bridges and
    // peeled structure never force frustration.
    struct BlockState {
        SignedGraph graph;             // block-local ids
        const CoreBlock* block;        // core node mapping
        FrustrationResult incumbent;
        int pack_lower = 0;
        bool proven = false;
    };
    std::vector<BlockState> blocks;
    {
        std::vector<int> to_local(red.core.node_count(), -1);
        std::uint64_t block_index = 0;
        for (const auto& cb : red.blocks) {
            if (cb.is_bridge) continue;
            for (std::size_t k = 0; k < cb.core_nodes.size(); ++k)
                to_local[cb.core_nodes[k]] = static_cast<int>(k);
            std::vector<SignedEdge> local_edges;
            local_edges.reserve(cb.edges.size());
            for (const auto& e : cb.edges)
                local_edges.push_back({to_local[e.u], to_local[e.v], e.sign});
            BlockState st;
            st.block = &cb;
            st.graph = SignedGraph(static_cast<int>(cb.core_nodes.size()), std::move(local_edges));
            SolverConfig ls_cfg = cfg;
            ls_cfg.seed = cfg.seed + 0x9E3779B97F4A7C15ull * (++block_index);
            st.incumbent = local_search(st.graph, ls_cfg);
            st.pack_lower = st.incumbent.lower_bound;
            st.proven = st.incumbent.exact;
            blocks.push_back(std::move(st));
        }
    }

    auto global_bounds = [&]() {
        int lower = 0, upper = 0;
        for (const auto& b : blocks) {
            lower += b.proven ? b.incumbent.upper_bound : b.pack_lower;
            upper += b.incumbent.upper_bound;
        }
        return std::pair{lower, upper};
    };
    auto gap_of = [](int lower, int upper) {
        return static_cast<double>(upper - lower) / static_cast<double>(std::max(upper, 1));
    };

    for (auto& b : blocks) {
        auto [lower, upper] = global_bounds();
        if (lower == upper || gap_of(lower, upper) <= cfg.target_gap) break;
        if (deadline && Clock::now() > *deadline) break;
        if (b.proven) continue;
        BlockSearch search(b.graph, b.incumbent.colouring, b.incumbent.upper_bound, deadline);
        BlockOutcome out = search.run();
        res.nodes_explored += out.nodes;
        b.incumbent.upper_bound = out.upper;
        b.incumbent.colouring = std::move(out.colouring);
        if (out.proven)
            b.proven = true;
        else
            b.pack_lower = std::max(b.pack_lower, out.lower);
    }

    auto [lower, upper] = global_bounds();
    res.lower_bound = lower;
    res.upper_bound = upper;
    res.exact = lower == upper;

    // Stitch block colourings into one core colouring: every block after the
    // first of its region meets already-placed nodes in exactly one cut node,
    // so a complement flip always aligns it; bridges orient their far side.
    std::vector<int> core_colour(red.core.node_count(), -1);
    {
        std::size_t bi = 0;
        for (const auto& cb : red.blocks) {
            if (cb.is_bridge) {
                int a = cb.core_nodes[0], b = cb.core_nodes[1];
                if (core_colour[a] == -1 && core_colour[b] == -1) core_colour[a] = 0;
                if (core_colour[a] != -1 && core_colour[b] == -1)
                    core_colour[b] = cb.bridge_sign > 0 ? core_colour[a] : 1 - core_colour[a];
                else if (core_colour[b] != -1 && core_colour[a] == -1)
                    core_colour[a] = cb.bridge_sign > 0 ? core_colour[b] : 1 - core_colour[b];
                continue;
            }
            const auto& c = blocks[bi++].incumbent.colouring;
            int flip = 0;
            for (std::size_t k = 0; k < cb.core_nodes.size(); ++k)
                if (core_colour[cb.core_nodes[k]] != -1) {
                    flip = (c[k] != core_colour[cb.core_nodes[k]]) ? 1 : 0;
                    break;
                }
            for (std::size_t k = 0; k < cb.core_nodes.size(); ++k)
                if (core_colour[cb.core_nodes[k]] == -1)
                    core_colour[cb.core_nodes[k]] = c[k] ^ flip;
        }
    }
    Colouring core_colouring(red.core.node_count(), 0);
    for (int v = 0; v < red.core.node_count(); ++v)
        core_colouring[v] = static_cast<std::uint8_t>(core_colour[v] == -1 ? 0 : core_colour[v]);
    res.colouring = lift(red, core_colouring);
    res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    check_solution_invariants(g, res);
    return res;
}

} // namespace frustra
