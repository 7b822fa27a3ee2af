#include "frustra/reduce.hpp"

#include <algorithm>
#include <cassert>

#include "frustra/errors.hpp"

namespace frustra {

namespace {

struct RawBlock {
    std::vector<SignedEdge> edges; // original ids
    std::vector<int> nodes;        // sorted unique original ids
};

// Biconnected components (blocks) of the subgraph induced by alive edges.
// Iterative Tarjan with an explicit edge stack; every alive edge lands in
// exactly one block.
std::vector<RawBlock> biconnected_blocks(const SignedGraph& g, const std::vector<char>& alive,
                                         const std::vector<char>& edge_alive) {
    const int n = g.node_count();
    std::vector<RawBlock> blocks;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<SignedEdge> edge_stack;

    std::vector<std::vector<std::pair<int, int>>> inc(n); // (edge index, other endpoint)
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edges()[ei];
        if (!edge_alive[ei]) continue;
        inc[e.u].emplace_back(ei, e.v);
        inc[e.v].emplace_back(ei, e.u);
    }

    struct Frame {
        int node;
        int parent_edge;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    int timer = 0;

    auto pop_block = [&](const SignedEdge& until) {
        RawBlock b;
        while (true) {
            SignedEdge e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.push_back(e);
            b.nodes.push_back(e.u);
            b.nodes.push_back(e.v);
            if (e.u == until.u && e.v == until.v) break;
        }
        std::sort(b.nodes.begin(), b.nodes.end());
        b.nodes.erase(std::unique(b.nodes.begin(), b.nodes.end()), b.nodes.end());
        blocks.push_back(std::move(b));
    };

    for (int root = 0; root < n; ++root) {
        if (!alive[root] || disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1});
        while (!stack.empty()) {
            Frame& f = stack.back();
            int u = f.node;
            if (f.next < inc[u].size()) {
                auto [ei, v] = inc[u][f.next++];
                if (ei == f.parent_edge) continue;
                const auto& e = g.edges()[ei];
                if (disc[v] == -1) {
                    edge_stack.push_back(e);
                    disc[v] = low[v] = timer++;
                    stack.push_back({v, ei});
                } else if (disc[v] < disc[u]) {
                    edge_stack.push_back(e);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().node;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) pop_block(g.edges()[f.parent_edge]);
                }
            }
        }
    }
    return blocks;
}

} // namespace

ReducedInstance reduce(const SignedGraph& g) {
    const int n = g.node_count();
    ReducedInstance r;
    r.original_node_count = n;

    // Peel isolated and degree-1 nodes to fixpoint.
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    std::vector<char> edge_alive(g.edge_count(), 1);
    std::vector<std::vector<std::pair<int, int>>> inc(n); // (edge index, other endpoint)
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edges()[ei];
        inc[e.u].emplace_back(ei, e.v);
        inc[e.v].emplace_back(ei, e.u);
    }
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!alive[v] || deg[v] > 1) continue;
        alive[v] = 0;
        if (deg[v] == 0) {
            r.peel_log.push_back({v, -1, 1});
            continue;
        }
        for (auto [ei, u] : inc[v]) {
            if (!edge_alive[ei] || !alive[u]) continue;
            edge_alive[ei] = 0;
            r.peel_log.push_back({v, u, g.edges()[ei].sign});
            if (--deg[u] <= 1) queue.push_back(u);
            break;
        }
    }

    // Dense core ids for the surviving induced subgraph.
    std::vector<int> to_core(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            to_core[v] = static_cast<int>(r.core_to_original.size());
            r.core_to_original.push_back(v);
        }
    std::vector<SignedEdge> core_edges;
    std::vector<std::string> core_labels;
    core_labels.reserve(r.core_to_original.size());
    for (int orig : r.core_to_original) core_labels.push_back(g.label(orig));
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        if (!edge_alive[ei]) continue;
        const auto& e = g.edges()[ei];
        core_edges.push_back({to_core[e.u], to_core[e.v], e.sign});
    }
    r.core = SignedGraph(static_cast<int>(r.core_to_original.size()), std::move(core_edges),
                         std::move(core_labels));

    // Block structure, ordered by BFS over the block-cut tree.
    auto raw = biconnected_blocks(g, alive, edge_alive);
    std::vector<std::vector<int>> blocks_of_node(n);
    for (std::size_t b = 0; b < raw.size(); ++b)
        for (int v : raw[b].nodes) blocks_of_node[v].push_back(static_cast<int>(b));

    std::vector<char> block_seen(raw.size(), 0);
    std::vector<int> bfs;
    for (std::size_t start = 0; start < raw.size(); ++start) {
        if (block_seen[start]) continue;
        block_seen[start] = 1;
        bfs.assign(1, static_cast<int>(start));
        for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
            RawBlock& b = raw[bfs[qi]];
            CoreBlock cb;
            cb.is_bridge = b.edges.size() == 1;
            cb.bridge_sign = b.edges[0].sign;
            cb.core_nodes.reserve(b.nodes.size());
            for (int v : b.nodes) cb.core_nodes.push_back(to_core[v]);
            if (!cb.is_bridge) {
                cb.edges.reserve(b.edges.size());
                for (const auto& e : b.edges) cb.edges.push_back({to_core[e.u], to_core[e.v], e.sign});
            }
            r.blocks.push_back(std::move(cb));
            for (int v : b.nodes)
                for (int nb : blocks_of_node[v])
                    if (!block_seen[nb]) {
                        block_seen[nb] = 1;
                        bfs.push_back(nb);
                    }
        }
    }
    return r;
}

Colouring lift(const ReducedInstance& r, const Colouring& core_colouring) {
    if (static_cast<int>(core_colouring.size()) != r.core.node_count())
        throw ContractError("core colouring length does not match reduced core");

    std::vector<int> colour(r.original_node_count, -1);
    for (std::size_t c = 0; c < r.core_to_original.size(); ++c)
        colour[r.core_to_original[c]] = core_colouring[c];

    // Peeled nodes, most recently removed first: the recorded neighbour is
    // either in the core or was removed later, so it is already coloured.
    for (auto it = r.peel_log.rbegin(); it != r.peel_log.rend(); ++it) {
        if (it->neighbour == -1)
            colour[it->node] = 0;
        else
            colour[it->node] = it->sign > 0 ? colour[it->neighbour] : 1 - colour[it->neighbour];
    }

    Colouring out(r.original_node_count);
    for (int v = 0; v < r.original_node_count; ++v) {
        assert(colour[v] != -1);
        out[v] = static_cast<std::uint8_t>(colour[v] == -1 ? 0 : colour[v]);
    }
    return out;
}

} // namespace frustra
