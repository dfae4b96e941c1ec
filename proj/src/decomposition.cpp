#include "tpj/decomposition.hpp"

#include <algorithm>
#include <deque>

namespace tpj {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : chi) w = std::max(w, bag.count() - 1);
    return w;
}

int HypertreeDecomposition::width() const {
    int w = 0;
    for (const auto& l : lambda) w = std::max(w, static_cast<int>(l.size()));
    return w;
}

namespace {

// 0 on success, otherwise a malformed-tree message in detail.
std::string check_tree_shape(const std::vector<int>& parent, int root, size_t nverts) {
    if (parent.size() != nverts) return "parent map size mismatch";
    if (nverts == 0) return root == -1 ? "" : "root set on an empty tree";
    if (root < 0 || root >= static_cast<int>(nverts)) return "root out of range";
    if (parent[static_cast<size_t>(root)] != -1) return "root has a parent";
    int roots = 0;
    for (size_t i = 0; i < nverts; ++i) {
        if (parent[i] == -1) {
            ++roots;
            continue;
        }
        if (parent[i] < 0 || parent[i] >= static_cast<int>(nverts)) return "parent index out of range";
    }
    if (roots != 1) return "tree has " + std::to_string(roots) + " roots";
    for (size_t i = 0; i < nverts; ++i) {
        int v = static_cast<int>(i), steps = 0;
        while (v != root) {
            v = parent[static_cast<size_t>(v)];
            if (v == -1 || ++steps > static_cast<int>(nverts)) return "tree is disconnected or cyclic";
        }
    }
    return "";
}

// Occurrence set of node x must induce a connected subtree.
bool occurrences_connected(const std::vector<NodeSet>& chi, const std::vector<int>& parent, int x) {
    const int m = static_cast<int>(chi.size());
    int total = 0, start = -1;
    for (int i = 0; i < m; ++i)
        if (chi[static_cast<size_t>(i)].test(x)) {
            ++total;
            start = i;
        }
    if (total <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        if (parent[static_cast<size_t>(i)] != -1) {
            adj[static_cast<size_t>(i)].push_back(parent[static_cast<size_t>(i)]);
            adj[static_cast<size_t>(parent[static_cast<size_t>(i)])].push_back(i);
        }
    std::vector<bool> seen(static_cast<size_t>(m), false);
    std::deque<int> q{start};
    seen[static_cast<size_t>(start)] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[static_cast<size_t>(v)]) {
            if (seen[static_cast<size_t>(w)] || !chi[static_cast<size_t>(w)].test(x)) continue;
            seen[static_cast<size_t>(w)] = true;
            ++reached;
            q.push_back(w);
        }
    }
    return reached == total;
}

}  // namespace

DecompositionVerdict verify_tree_decomposition(const Hypergraph& g, const TreeDecomposition& td) {
    if (!td.universe || !(*td.universe == *g.universe()))
        return {std::nullopt, 0, "decomposition uses a different universe"};
    if (auto msg = check_tree_shape(td.parent, td.root, td.chi.size()); !msg.empty())
        return {std::nullopt, 0, msg};
    for (const auto& bag : td.chi)
        if (!bag.is_subset_of(g.nodes()))
            return {std::nullopt, 0, "bag contains a node outside the graph"};

    // (1) every node appears in some bag
    for (int x = g.nodes().first(); x != -1; x = g.nodes().next(x)) {
        bool found = false;
        for (const auto& bag : td.chi)
            if (bag.test(x)) {
                found = true;
                break;
            }
        if (!found) return {std::nullopt, 1, "node " + g.universe()->name(x) + " not covered by any bag"};
    }
    // (2) every Gaifman edge fits inside some bag
    Hypergraph gg = gaifman(g);
    for (const auto& e : gg.edges()) {
        bool found = false;
        for (const auto& bag : td.chi)
            if (e.members.is_subset_of(bag)) {
                found = true;
                break;
            }
        if (!found) {
            auto names = g.node_names(e.members);
            return {std::nullopt, 2, "edge {" + names[0] + "," + names[1] + "} covered by no bag"};
        }
    }
    // (3) occurrence sets induce connected subtrees
    for (int x = g.nodes().first(); x != -1; x = g.nodes().next(x))
        if (!occurrences_connected(td.chi, td.parent, x))
            return {std::nullopt, 3, "occurrences of node " + g.universe()->name(x) + " are disconnected"};

    return {td.width(), 0, ""};
}

DecompositionVerdict verify_hypertree_decomposition(const Hypergraph& h,
                                                    const HypertreeDecomposition& hd,
                                                    bool generalized) {
    if (!hd.universe || !(*hd.universe == *h.universe()))
        return {std::nullopt, 0, "decomposition uses a different universe"};
    if (auto msg = check_tree_shape(hd.parent, hd.root, hd.chi.size()); !msg.empty())
        return {std::nullopt, 0, msg};
    if (hd.lambda.size() != hd.chi.size())
        return {std::nullopt, 0, "lambda size does not match vertex count"};
    for (const auto& l : hd.lambda)
        for (int e : l)
            if (e < 0 || e >= h.edge_count())
                return {std::nullopt, 0, "lambda references an unknown edge"};

    // (1) every hyperedge fits inside some chi bag
    for (const auto& e : h.edges()) {
        bool found = false;
        for (const auto& bag : hd.chi)
            if (e.members.is_subset_of(bag)) {
                found = true;
                break;
            }
        if (!found) return {std::nullopt, 1, "hyperedge " + e.name + " covered by no vertex"};
    }
    // (2) occurrence sets induce connected subtrees
    for (int x = h.nodes().first(); x != -1; x = h.nodes().next(x))
        if (!occurrences_connected(hd.chi, hd.parent, x))
            return {std::nullopt, 2, "occurrences of node " + h.universe()->name(x) + " are disconnected"};
    // (3) chi(p) within nodes(lambda(p))
    for (size_t p = 0; p < hd.chi.size(); ++p) {
        NodeSet cover(h.universe()->size());
        for (int e : hd.lambda[p]) cover |= h.edge(e).members;
        if (!hd.chi[p].is_subset_of(cover))
            return {std::nullopt, 3,
                    "chi of vertex " + std::to_string(p) + " is not covered by its lambda"};
    }
    // (4) descendant reappearance of lambda nodes, hypertree decompositions only
    if (!generalized) {
        std::vector<std::vector<int>> ch(hd.chi.size());
        for (size_t i = 0; i < hd.parent.size(); ++i)
            if (hd.parent[i] != -1) ch[static_cast<size_t>(hd.parent[i])].push_back(static_cast<int>(i));
        std::vector<NodeSet> chi_subtree(hd.chi.size());
        // accumulate chi over subtrees bottom-up
        std::vector<int> order;
        std::deque<int> q{hd.root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            order.push_back(v);
            for (int c : ch[static_cast<size_t>(v)]) q.push_back(c);
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeSet acc = hd.chi[static_cast<size_t>(*it)];
            for (int c : ch[static_cast<size_t>(*it)]) acc |= chi_subtree[static_cast<size_t>(c)];
            chi_subtree[static_cast<size_t>(*it)] = acc;
        }
        for (size_t p = 0; p < hd.chi.size(); ++p) {
            NodeSet cover(h.universe()->size());
            for (int e : hd.lambda[p]) cover |= h.edge(e).members;
            NodeSet bad = (cover & chi_subtree[p]) - hd.chi[p];
            if (!bad.empty())
                return {std::nullopt, 4,
                        "node " + h.universe()->name(bad.first()) + " of lambda(" + std::to_string(p) +
                            ") reappears below without being in chi"};
        }
    }
    return {hd.width(), 0, ""};
}

CheckResult is_sh07_connected(const Hypergraph& h, const HypertreeDecomposition& hd) {
    auto v = verify_hypertree_decomposition(h, hd, true);
    if (!v.ok()) return CheckResult::fail("not a valid decomposition: " + v.detail);
    if (hd.chi.empty()) return CheckResult::pass();
    if (hd.lambda[static_cast<size_t>(hd.root)].size() != 1)
        return CheckResult::fail("root lambda has size " +
                                 std::to_string(hd.lambda[static_cast<size_t>(hd.root)].size()));
    for (size_t s = 0; s < hd.chi.size(); ++s) {
        int p = hd.parent[s];
        if (p == -1) continue;
        for (int e : hd.lambda[s]) {
            NodeSet meet = h.edge(e).members & hd.chi[s] & hd.chi[static_cast<size_t>(p)];
            if (meet.empty())
                return CheckResult::fail("edge " + h.edge(e).name + " of child " + std::to_string(s) +
                                         " misses chi(" + std::to_string(s) + ") & chi(" +
                                         std::to_string(p) + ")");
        }
    }
    return CheckResult::pass();
}

HypertreeDecomposition decomposition_from_join_tree(const JoinTree& jt) {
    HypertreeDecomposition hd;
    hd.universe = jt.owner.universe();
    hd.parent = jt.parent;
    hd.root = jt.root;
    for (int i = 0; i < jt.owner.edge_count(); ++i) {
        hd.chi.push_back(jt.owner.edge(i).members);
        hd.lambda.push_back({i});
    }
    return hd;
}

}  // namespace tpj
