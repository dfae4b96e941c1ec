#include "tpj/join_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace tpj {

std::vector<std::vector<int>> JoinTree::children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (size_t i = 0; i < parent.size(); ++i)
        if (parent[i] != -1) ch[static_cast<size_t>(parent[i])].push_back(static_cast<int>(i));
    return ch;
}

JoinTree JoinTree::rerooted(int new_root) const {
    if (new_root < 0 || new_root >= static_cast<int>(parent.size()))
        throw std::invalid_argument("rerooted: vertex out of range");
    JoinTree out{owner, parent, new_root};
    // reverse the parent chain from new_root up to the old root
    int v = new_root, prev = -1;
    while (v != -1) {
        int up = parent[static_cast<size_t>(v)];
        out.parent[static_cast<size_t>(v)] = prev;
        prev = v;
        v = up;
    }
    return out;
}

NodeSet JoinTree::subtree_nodes(int v) const {
    auto ch = children();
    NodeSet acc(owner.universe()->size());
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        acc |= owner.edge(x).members;
        for (int c : ch[static_cast<size_t>(x)]) stack.push_back(c);
    }
    return acc;
}

std::optional<JoinTree> build_join_tree(const Hypergraph& h) {
    const int m = h.edge_count();
    if (m == 0) return JoinTree{h, {}, -1};

    std::vector<NodeSet> residual;
    residual.reserve(static_cast<size_t>(m));
    for (const auto& e : h.edges()) residual.push_back(e.members);
    std::vector<bool> alive(static_cast<size_t>(m), true);
    std::vector<int> parent(static_cast<size_t>(m), -1);
    int alive_count = m;

    const int n = h.universe()->size();
    bool changed = true;
    while (changed && alive_count > 1) {
        changed = false;
        // prune nodes occurring in exactly one alive residual edge
        for (int x = 0; x < n; ++x) {
            int holder = -1, cnt = 0;
            for (int i = 0; i < m && cnt < 2; ++i)
                if (alive[static_cast<size_t>(i)] && residual[static_cast<size_t>(i)].test(x)) {
                    holder = i;
                    ++cnt;
                }
            if (cnt == 1) {
                residual[static_cast<size_t>(holder)].reset(x);
                changed = true;
            }
        }
        // absorb a residual edge into a witness superset
        for (int i = 0; i < m; ++i) {
            if (!alive[static_cast<size_t>(i)]) continue;
            for (int j = 0; j < m; ++j) {
                if (i == j || !alive[static_cast<size_t>(j)]) continue;
                const auto& ri = residual[static_cast<size_t>(i)];
                const auto& rj = residual[static_cast<size_t>(j)];
                if (ri.is_subset_of(rj) && (ri != rj || j < i)) {
                    alive[static_cast<size_t>(i)] = false;
                    parent[static_cast<size_t>(i)] = j;
                    --alive_count;
                    changed = true;
                    break;
                }
            }
            if (alive_count == 1) break;
        }
    }

    if (alive_count != 1) return std::nullopt;
    int root = -1;
    for (int i = 0; i < m; ++i)
        if (alive[static_cast<size_t>(i)]) root = i;
    return JoinTree{h, std::move(parent), root};
}

bool is_acyclic(const Hypergraph& h) { return build_join_tree(h).has_value(); }

CheckResult verify_join_tree(const Hypergraph& h, const JoinTree& jt) {
    if (!h.same_universe(jt.owner))
        return CheckResult::fail("join tree owner uses a different universe");
    // vertex hyperedges must be exactly edges(h)
    for (const auto& e : h.edges())
        if (jt.owner.edge_index(e.members) == -1)
            return CheckResult::fail("missing hyperedge " + e.name);
    for (const auto& e : jt.owner.edges())
        if (h.edge_index(e.members) == -1)
            return CheckResult::fail("extra hyperedge " + e.name);
    const int m = jt.owner.edge_count();
    if (static_cast<int>(jt.parent.size()) != m)
        return CheckResult::fail("parent map size does not match vertex count");
    if (m == 0) return CheckResult::pass();
    if (jt.root < 0 || jt.root >= m || jt.parent[static_cast<size_t>(jt.root)] != -1)
        return CheckResult::fail("invalid root");
    int roots = 0;
    for (int i = 0; i < m; ++i) {
        int p = jt.parent[static_cast<size_t>(i)];
        if (p == -1) {
            ++roots;
            continue;
        }
        if (p < 0 || p >= m) return CheckResult::fail("parent index out of range");
    }
    if (roots != 1) return CheckResult::fail("not a tree: " + std::to_string(roots) + " roots");
    // connectivity to the root (also rules out parent cycles)
    for (int i = 0; i < m; ++i) {
        int v = i, steps = 0;
        while (v != jt.root) {
            v = jt.parent[static_cast<size_t>(v)];
            if (v == -1 || ++steps > m)
                return CheckResult::fail("not a tree: vertex " + jt.owner.edge(i).name +
                                         " is disconnected from the root");
        }
    }
    // connectedness condition per node
    auto ch = jt.children();
    const int n = h.universe()->size();
    for (int x = 0; x < n; ++x) {
        int total = 0, start = -1;
        for (int i = 0; i < m; ++i)
            if (jt.owner.edge(i).members.test(x)) {
                ++total;
                start = i;
            }
        if (total <= 1) continue;
        // BFS over tree edges staying inside vertices containing x
        std::vector<bool> seen(static_cast<size_t>(m), false);
        std::deque<int> q{start};
        seen[static_cast<size_t>(start)] = true;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            std::vector<int> nbrs = ch[static_cast<size_t>(v)];
            if (jt.parent[static_cast<size_t>(v)] != -1) nbrs.push_back(jt.parent[static_cast<size_t>(v)]);
            for (int w : nbrs) {
                if (seen[static_cast<size_t>(w)] || !jt.owner.edge(w).members.test(x)) continue;
                seen[static_cast<size_t>(w)] = true;
                ++reached;
                q.push_back(w);
            }
        }
        if (reached != total)
            return CheckResult::fail("connectedness violated for node " + h.universe()->name(x));
    }
    return CheckResult::pass();
}

namespace {

CheckResult check_preconditions(const JoinTree& jt, const Hypergraph& h1) {
    if (!jt.owner.same_universe(h1))
        return CheckResult::fail("owner and h1 use different universes");
    auto v = verify_join_tree(jt.owner, jt);
    if (!v) return CheckResult::fail("not a valid join tree: " + v.detail);
    if (!is_reduced(jt.owner)) return CheckResult::fail("owner hypergraph is not reduced");
    if (jt.owner.nodes() != h1.nodes())
        return CheckResult::fail("owner and h1 have different node sets");
    if (!leq(h1, jt.owner)) return CheckResult::fail("h1 is not covered by the owner");
    return CheckResult::pass();
}

// BFS order from the root.
std::vector<int> bfs_order(const JoinTree& jt) {
    std::vector<int> order;
    if (jt.root == -1) return order;
    auto ch = jt.children();
    std::deque<int> q{jt.root};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        for (int c : ch[static_cast<size_t>(v)]) q.push_back(c);
    }
    return order;
}

// Components of the sub-hypergraph of h induced by the edges fully inside s;
// isolated nodes of s count as singleton components.
bool induced_connected(const Hypergraph& h, const NodeSet& s) {
    if (s.empty() || s.count() == 1) return true;
    const int n = h.universe()->size();
    NodeSet visited(n);
    int start = s.first();
    std::vector<int> stack{start};
    visited.set(start);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& e : h.edges()) {
            if (!e.members.test(x) || !e.members.is_subset_of(s)) continue;
            for (int y = e.members.first(); y != -1; y = e.members.next(y))
                if (!visited.test(y)) {
                    visited.set(y);
                    stack.push_back(y);
                }
        }
    }
    return (s - visited).empty();
}

}  // namespace

CheckResult is_component_tree(const JoinTree& jt, const Hypergraph& h1) {
    if (auto pre = check_preconditions(jt, h1); !pre) return pre;
    if (jt.root == -1) return CheckResult::pass();

    const auto& owner = jt.owner;
    auto ch = jt.children();
    auto order = bfs_order(jt);
    std::vector<NodeSet> c_top(static_cast<size_t>(owner.edge_count()));
    c_top[static_cast<size_t>(jt.root)] = h1.nodes();

    for (int r : order) {
        const NodeSet& hr = owner.edge(r).members;
        auto comps = v_components(h1, hr);

        // subtrees -> components
        for (int s : ch[static_cast<size_t>(r)]) {
            const NodeSet& hs = owner.edge(s).members;
            NodeSet sub = jt.subtree_nodes(s);
            NodeSet c = sub - hr;
            if (!(sub & hr).is_subset_of(hs))
                return CheckResult::fail("subtree at " + owner.edge(s).name +
                                         " carries nodes of " + owner.edge(r).name +
                                         " outside the shared overlap");
            bool is_comp = false;
            for (const auto& comp : comps)
                if (comp == c) {
                    is_comp = true;
                    break;
                }
            if (!is_comp)
                return CheckResult::fail("nodes under " + owner.edge(s).name +
                                         " minus " + owner.edge(r).name +
                                         " are not a component of h1");
            if (!hs.intersects(c))
                return CheckResult::fail("child " + owner.edge(s).name +
                                         " does not intersect its component");
            if (!hs.is_subset_of(frontier(h1, c)))
                return CheckResult::fail("child " + owner.edge(s).name +
                                         " is not within the frontier of its component (at " +
                                         owner.edge(r).name + ")");
            c_top[static_cast<size_t>(s)] = c;
        }

        // components -> subtrees
        std::map<NodeSet, int> child_of;
        for (int s : ch[static_cast<size_t>(r)]) {
            auto [it, inserted] = child_of.emplace(c_top[static_cast<size_t>(s)], s);
            if (!inserted)
                return CheckResult::fail("two children of " + owner.edge(r).name +
                                         " decompose the same component");
        }
        size_t matched = 0;
        for (const auto& comp : comps) {
            if (!comp.is_subset_of(c_top[static_cast<size_t>(r)])) continue;
            auto it = child_of.find(comp);
            if (it == child_of.end())
                return CheckResult::fail("component of h1 at " + owner.edge(r).name +
                                         " has no child subtree (least node " +
                                         h1.universe()->name(comp.first()) + ")");
            ++matched;
        }
        if (matched != child_of.size())
            return CheckResult::fail("vertex " + owner.edge(r).name +
                                     " has a child outside its own component");
    }
    return CheckResult::pass();
}

CheckResult is_h1_connected(const JoinTree& jt, const Hypergraph& h1) {
    if (auto pre = check_preconditions(jt, h1); !pre) return pre;
    if (jt.root == -1) return CheckResult::pass();

    const auto& owner = jt.owner;
    for (int s = 0; s < owner.edge_count(); ++s) {
        int r = jt.parent[static_cast<size_t>(s)];
        if (r == -1) continue;
        // orientation r -> s: the stored subtree below s
        NodeSet below = jt.subtree_nodes(s);
        if (!induced_connected(h1, below))
            return CheckResult::fail("sub-hypergraph under " + owner.edge(s).name +
                                     " (rooted at " + owner.edge(r).name + ") is disconnected");
        // orientation s -> r: everything else
        NodeSet in_sub(owner.universe()->size());
        {
            auto ch = jt.children();
            std::vector<int> stack{s};
            std::vector<bool> mark(static_cast<size_t>(owner.edge_count()), false);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                mark[static_cast<size_t>(v)] = true;
                for (int c : ch[static_cast<size_t>(v)]) stack.push_back(c);
            }
            for (int v = 0; v < owner.edge_count(); ++v)
                if (!mark[static_cast<size_t>(v)]) in_sub |= owner.edge(v).members;
        }
        if (!induced_connected(h1, in_sub))
            return CheckResult::fail("sub-hypergraph opposite " + owner.edge(s).name +
                                     " (rooted at " + owner.edge(s).name + ") is disconnected");
    }
    return CheckResult::pass();
}

CheckResult is_normal_form(const JoinTree& jt, const Hypergraph& h1) {
    if (auto c = is_h1_connected(jt, h1); !c) return c;
    return is_component_tree(jt, h1);
}

}  // namespace tpj
