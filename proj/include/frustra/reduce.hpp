#pragma once

#include <vector>

#include "frustra/graph.hpp"

namespace frustra {

/// One peeling step. neighbour == -1 means the node was isolated when removed;
/// otherwise it was a degree-1 node hanging off `neighbour` with edge `sign`.
struct PeelStep {
    int node = -1;
    int neighbour = -1;
    int sign = 1;
};

/// A biconnected block of the core, in core ids. Bridges carry exactly two
/// nodes and never force frustration; nontrivial blocks are solved
/// independently and re-aligned at their shared cut node.
struct CoreBlock {
    std::vector<int> core_nodes;
    std::vector<SignedEdge> edges; // core ids; empty for bridges
    bool is_bridge = false;
    int bridge_sign = 1;
};

/// Result of preprocessing: the frustration index of the original graph equals
/// that of the core (removed structure never forces frustration), and any
/// optimal core colouring lifts to an optimal original colouring.
struct ReducedInstance {
    SignedGraph core; // induced subgraph on unpeeled nodes, dense ids
    int removed_contribution = 0;
    std::vector<PeelStep> peel_log; // original ids, in removal order
    std::vector<int> core_to_original;
    /// Blocks in block-cut-tree BFS order: every block after the first of its
    /// region shares exactly one already-placed node.
    std::vector<CoreBlock> blocks;
    int original_node_count = 0;
};

/// Peels isolated and degree-1 nodes to fixpoint, then records the
/// biconnected block structure of what remains.
ReducedInstance reduce(const SignedGraph& g);

/// Maps a core colouring back to the original node set by replaying the peel
/// log; each peeled edge is coloured to be satisfied.
Colouring lift(const ReducedInstance& r, const Colouring& core_colouring);

} // namespace frustra
