#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace frustra {

/// A single undirected signed edge, stored with u < v and sign in {-1,+1}.
struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Two-colouring of the nodes: 1 = black (in X), 0 = white (in the complement).
using Colouring = std::vector<std::uint8_t>;

Colouring complement(const Colouring& x);

/// Immutable simple undirected graph with +-1 edge signs.
///
/// Node ids are dense integers in [0, n). Original input labels are kept
/// alongside for reporting. Instances are safe to share across threads.
class SignedGraph {
public:
    SignedGraph() = default;

    /// Validates and normalizes edges (u < v), builds adjacency.
    /// Throws std::invalid_argument on self-loops, duplicates or ids out of range.
    SignedGraph(int node_count, std::vector<SignedEdge> edges,
                std::vector<std::string> labels = {});

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int negative_edge_count() const { return m_minus_; }
    int positive_edge_count() const { return edge_count() - m_minus_; }

    std::span<const SignedEdge> edges() const { return edges_; }

    /// Neighbours of v as (neighbour id, sign) pairs.
    const std::vector<std::pair<int, int>>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }

private:
    int n_ = 0;
    int m_minus_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::string> labels_;
};

/// Reads the whitespace edge-list format: `<u> <v> <sign>` per line, sign in
/// {+, -, +1, -1, 1}; '#' starts a comment, blank lines are skipped. Labels
/// are arbitrary strings, compacted to [0, n) in first-appearance order.
/// Throws ParseError naming the offending line.
SignedGraph parse_edge_list(std::istream& in);
SignedGraph parse_edge_list_file(const std::string& path);

/// Canonical form: one `<u> <v> <+1|-1>` line per edge, stored order, i < j.
void serialize_edge_list(const SignedGraph& g, std::ostream& out);
std::string serialize_edge_list(const SignedGraph& g);

/// Frustration count of a colouring: positive edges are frustrated across
/// colours, negative edges within a colour.
int frustration_count(const SignedGraph& g, const Colouring& x);

inline bool edge_frustrated(int sign, std::uint8_t cu, std::uint8_t cv) {
    return sign > 0 ? cu != cv : cu == cv;
}

struct BalanceCheck {
    bool balanced = false;
    /// Zero-frustration colouring when balanced.
    Colouring colouring;
    /// One cycle with negative sign product when unbalanced.
    std::vector<SignedEdge> negative_cycle;
};

/// Sign-consistent two-colouring traversal; O(n + m).
BalanceCheck is_balanced(const SignedGraph& g);

/// Negates every edge with exactly one endpoint in the given set.
SignedGraph switch_signs(const SignedGraph& g, const std::vector<std::uint8_t>& in_set);

struct ComponentSplit {
    std::vector<SignedGraph> components;
    /// Per component, component-local id -> original id.
    std::vector<std::vector<int>> to_original;
    /// Per original node: which component, and the id inside it.
    std::vector<int> component_of;
    std::vector<int> index_in_component;
};

ComponentSplit connected_components(const SignedGraph& g);

} // namespace frustra
