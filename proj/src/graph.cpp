#include "frustra/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "frustra/errors.hpp"

namespace frustra {

Colouring complement(const Colouring& x) {
    Colouring y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] ? 0 : 1;
    return y;
}

SignedGraph::SignedGraph(int node_count, std::vector<SignedEdge> edges,
                         std::vector<std::string> labels)
    : n_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw ContractError("node count must be nonnegative");
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != n_)
        throw ContractError("label list length does not match node count");

    adj_.assign(n_, {});
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw ContractError("edge endpoint out of range");
        if (e.u == e.v)
            throw ContractError("self-loop on node " + labels_[e.u]);
        if (e.sign != 1 && e.sign != -1)
            throw ContractError("edge sign must be +1 or -1");
        std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
        if (!seen.insert(key).second)
            throw ContractError("duplicate edge " + labels_[e.u] + " " + labels_[e.v]);
        if (e.sign < 0) ++m_minus_;
        adj_[e.u].emplace_back(e.v, e.sign);
        adj_[e.v].emplace_back(e.u, e.sign);
    }
}

namespace {

int parse_sign_token(const std::string& tok) {
    if (tok == "+" || tok == "+1" || tok == "1") return 1;
    if (tok == "-" || tok == "-1") return -1;
    return 0;
}

} // namespace

SignedGraph parse_edge_list(std::istream& in) {
    std::vector<SignedEdge> edges;
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> id_of;

    auto intern = [&](const std::string& name) {
        auto [it, inserted] = id_of.try_emplace(name, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(name);
        return it->second;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, s, extra;
        if (!(ls >> a)) continue; // blank
        if (!(ls >> b >> s))
            throw ParseError("line " + std::to_string(lineno) + ": expected `<u> <v> <sign>`");
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) + ": trailing token `" + extra + "`");
        int sign = parse_sign_token(s);
        if (sign == 0)
            throw ParseError("line " + std::to_string(lineno) + ": bad sign token `" + s + "`");
        if (a == b)
            throw ParseError("line " + std::to_string(lineno) + ": self-loop on `" + a + "`");
        edges.push_back({intern(a), intern(b), sign});
    }

    try {
        return SignedGraph(static_cast<int>(labels.size()), std::move(edges), std::move(labels));
    } catch (const ContractError& e) {
        throw ParseError(std::string("invalid edge list: ") + e.what());
    }
}

SignedGraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return parse_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void serialize_edge_list(const SignedGraph& g, std::ostream& out) {
    for (const auto& e : g.edges())
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << (e.sign > 0 ? "+1" : "-1") << '\n';
}

std::string serialize_edge_list(const SignedGraph& g) {
    std::ostringstream os;
    serialize_edge_list(g, os);
    return os.str();
}

int frustration_count(const SignedGraph& g, const Colouring& x) {
    if (static_cast<int>(x.size()) != g.node_count())
        throw ContractError("colouring length does not match node count");
    int count = 0;
    for (const auto& e : g.edges())
        count += edge_frustrated(e.sign, x[e.u], x[e.v]);
    return count;
}

BalanceCheck is_balanced(const SignedGraph& g) {
    const int n = g.node_count();
    BalanceCheck res;
    res.colouring.assign(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<int> parent(n, -1), parent_sign(n, 1);
    std::vector<int> stack;

    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, s] : g.neighbours(u)) {
                std::uint8_t want = static_cast<std::uint8_t>(s > 0 ? res.colouring[u] : 1 - res.colouring[u]);
                if (!visited[v]) {
                    visited[v] = 1;
                    res.colouring[v] = want;
                    parent[v] = u;
                    parent_sign[v] = s;
                    stack.push_back(v);
                } else if (res.colouring[v] != want) {
                    // Sign-inconsistent non-tree edge: the tree paths from u
                    // and v to their meeting point plus (u,v) form a negative cycle.
                    std::vector<int> up, vp;
                    for (int a = u; a != -1; a = parent[a]) up.push_back(a);
                    for (int b = v; b != -1; b = parent[b]) vp.push_back(b);
                    std::reverse(up.begin(), up.end());
                    std::reverse(vp.begin(), vp.end());
                    std::size_t common = 0;
                    while (common + 1 < up.size() && common + 1 < vp.size() &&
                           up[common + 1] == vp[common + 1])
                        ++common;
                    auto tree_edge = [&](int child) {
                        SignedEdge e{parent[child], child, parent_sign[child]};
                        if (e.u > e.v) std::swap(e.u, e.v);
                        return e;
                    };
                    for (std::size_t i = up.size(); i-- > common + 1;)
                        res.negative_cycle.push_back(tree_edge(up[i]));
                    SignedEdge closing{u, v, s};
                    if (closing.u > closing.v) std::swap(closing.u, closing.v);
                    res.negative_cycle.push_back(closing);
                    for (std::size_t i = common + 1; i < vp.size(); ++i)
                        res.negative_cycle.push_back(tree_edge(vp[i]));
                    res.balanced = false;
                    res.colouring.clear();
                    return res;
                }
            }
        }
    }
    res.balanced = true;
    return res;
}

SignedGraph switch_signs(const SignedGraph& g, const std::vector<std::uint8_t>& in_set) {
    if (static_cast<int>(in_set.size()) != g.node_count())
        throw ContractError("switch set length does not match node count");
    std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
    for (auto& e : edges)
        if (in_set[e.u] != in_set[e.v]) e.sign = -e.sign;
    return SignedGraph(g.node_count(), std::move(edges), g.labels());
}

ComponentSplit connected_components(const SignedGraph& g) {
    const int n = g.node_count();
    ComponentSplit split;
    split.component_of.assign(n, -1);
    split.index_in_component.assign(n, -1);

    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (split.component_of[root] != -1) continue;
        int comp = static_cast<int>(split.to_original.size());
        split.to_original.emplace_back();
        auto& members = split.to_original.back();
        split.component_of[root] = comp;
        split.index_in_component[root] = 0;
        members.push_back(root);
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, s] : g.neighbours(u)) {
                (void)s;
                if (split.component_of[v] == -1) {
                    split.component_of[v] = comp;
                    split.index_in_component[v] = static_cast<int>(members.size());
                    members.push_back(v);
                    stack.push_back(v);
                }
            }
        }
    }

    split.components.reserve(split.to_original.size());
    std::vector<std::vector<SignedEdge>> comp_edges(split.to_original.size());
    for (const auto& e : g.edges()) {
        int c = split.component_of[e.u];
        comp_edges[c].push_back({split.index_in_component[e.u], split.index_in_component[e.v], e.sign});
    }
    for (std::size_t c = 0; c < split.to_original.size(); ++c) {
        std::vector<std::string> labels;
        labels.reserve(split.to_original[c].size());
        for (int orig : split.to_original[c]) labels.push_back(g.label(orig));
        split.components.emplace_back(static_cast<int>(split.to_original[c].size()),
                                      std::move(comp_edges[c]), std::move(labels));
    }
    return split;
}

} // namespace frustra
