#ifndef TPJ_JOIN_TREE_HPP
#define TPJ_JOIN_TREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpj/hypergraph.hpp"

namespace tpj {

// Validator verdict; `detail` carries the first violation found by the
// deterministic traversal order, so messages are stable test oracles.
struct CheckResult {
    bool ok = true;
    std::string detail;

    explicit operator bool() const { return ok; }
    static CheckResult fail(std::string msg) { return CheckResult{false, std::move(msg)}; }
    static CheckResult pass() { return CheckResult{}; }
};

// Rooted tree over the edges of `owner`: vertex i is owner.edge(i).
struct JoinTree {
    Hypergraph owner;
    std::vector<int> parent;  // parent[i] = -1 for the root
    int root = -1;

    std::vector<std::vector<int>> children() const;
    // Pure re-rooting; never changes verify_join_tree's verdict.
    JoinTree rerooted(int new_root) const;
    // Node union over the vertices of the subtree at v (tree as stored).
    NodeSet subtree_nodes(int v) const;
};

// GYO-style reduction with join-tree recovery: repeatedly prune nodes that
// occur in a single residual edge and absorb residual edges into a witness
// superset. Succeeds exactly on acyclic hypergraphs.
std::optional<JoinTree> build_join_tree(const Hypergraph& h);

bool is_acyclic(const Hypergraph& h);

// Vertices of jt biject with edges(h) and every node's occurrences induce a
// connected subtree.
CheckResult verify_join_tree(const Hypergraph& h, const JoinTree& jt);

// Definition of a component tree, checked clause by clause at every vertex
// against h1 (which must have the same nodes as jt.owner, with h1 <= owner).
// The owner must be reduced.
CheckResult is_component_tree(const JoinTree& jt, const Hypergraph& h1);

// Every oriented tree edge (r,s) induces on nodes(subtree of s rooted at r) a
// connected sub-hypergraph of h1 (edges of h1 fully inside the node set).
CheckResult is_h1_connected(const JoinTree& jt, const Hypergraph& h1);

// is_h1_connected and is_component_tree combined.
CheckResult is_normal_form(const JoinTree& jt, const Hypergraph& h1);

}  // namespace tpj

#endif
