#include "tpj/tree_projection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tpj {

TPInstance::TPInstance(Hypergraph a, Hypergraph b) : h1(std::move(a)), h2(std::move(b)) {
    if (!h1.same_universe(h2))
        throw std::invalid_argument("TPInstance: hypergraphs use different universes");
}

bool TPReport::all_necessary_hold() const {
    if (!(valid && reduced && nodes_preserved && components_preserved && h1_connected_all_roots))
        return false;
    for (const auto& w : normal_form_witnesses)
        if (!w.tree) return false;
    return true;
}

CheckResult is_tree_projection(const Hypergraph& ha, const TPInstance& inst) {
    if (!ha.same_universe(inst.h1))
        return CheckResult::fail("candidate uses a different universe");
    if (!leq(inst.h1, ha)) return CheckResult::fail("h1 is not covered by the candidate");
    if (!leq(ha, inst.h2)) return CheckResult::fail("candidate is not covered by h2");
    if (!is_acyclic(ha)) return CheckResult::fail("candidate is cyclic");
    return CheckResult::pass();
}

Hypergraph strategy_to_tp(const GameTree& t, const TPInstance& inst) {
    if (auto v = verify_strategy(t, inst.h1, inst.h2); !v)
        throw std::invalid_argument("strategy_to_tp: not a winning strategy: " + v.detail);
    if (!is_monotone(t, inst.h1))
        throw std::invalid_argument("strategy_to_tp: strategy is not monotone");
    std::set<NodeSet> positions;
    for (const auto& v : t.verts)
        if (!v.cops.empty()) positions.insert(v.cops);
    std::vector<Hyperedge> edges;
    int i = 0;
    for (const auto& m : positions) edges.push_back(Hyperedge{"m" + std::to_string(i++), m});
    Hypergraph tp(inst.h1.universe(), inst.h1.nodes(), std::move(edges));
    if (auto v = is_tree_projection(tp, inst); !v)
        throw std::logic_error("strategy_to_tp: produced hypergraph is not a tree projection: " +
                               v.detail);
    return tp;
}

std::optional<Hypergraph> find_tp(const TPInstance& inst) {
    auto strat = solve(inst.h1, inst.h2);
    if (!strat) return std::nullopt;
    return strategy_to_tp(*strat, inst);
}

// -- elimination-order machinery -------------------------------------------
//
// A tree projection of (h1, h2) exists exactly when some triangulation of the
// Gaifman graph of h1 (on its covered nodes) has every maximal clique inside
// an edge of h2; eliminating nodes in every order enumerates all candidate
// triangulations, and the reduced bag set of a feasible order is an acyclic
// hypergraph sandwiched between h1 and h2. Every minimal tree projection
// shows up this way: its own join tree yields a perfect elimination order
// whose bags land inside the projection's edges.

namespace {

struct ElimContext {
    const Hypergraph* h1;
    const Hypergraph* h2;
    std::vector<int> verts;           // covered nodes of h1
    std::vector<int> pos;             // node index -> position in verts, or -1
    std::vector<NodeSet> adj;         // Gaifman adjacency per position, as positions
    std::vector<NodeSet> squads_pos;  // h2 edges translated to position space
    int n = 0;

    NodeSet to_universe(const NodeSet& s) const {
        NodeSet out(h1->universe()->size());
        for (int p = s.first(); p != -1; p = s.next(p)) out.set(verts[static_cast<size_t>(p)]);
        return out;
    }
};

ElimContext make_elim_context(const TPInstance& inst) {
    ElimContext cx;
    cx.h1 = &inst.h1;
    cx.h2 = &inst.h2;
    const NodeSet& covered = inst.h1.covered_nodes();
    cx.pos.assign(static_cast<size_t>(inst.h1.universe()->size()), -1);
    for (int x = covered.first(); x != -1; x = covered.next(x)) {
        cx.pos[static_cast<size_t>(x)] = static_cast<int>(cx.verts.size());
        cx.verts.push_back(x);
    }
    cx.n = static_cast<int>(cx.verts.size());
    cx.adj.assign(static_cast<size_t>(cx.n), NodeSet(cx.n));
    for (const auto& e : inst.h1.edges()) {
        auto v = e.members.to_vector();
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j)
                if (i != j)
                    cx.adj[static_cast<size_t>(cx.pos[static_cast<size_t>(v[i])])].set(
                        cx.pos[static_cast<size_t>(v[j])]);
    }
    for (const auto& e : inst.h2.edges()) {
        NodeSet s(cx.n);
        for (int x = e.members.first(); x != -1; x = e.members.next(x))
            if (cx.pos[static_cast<size_t>(x)] != -1) s.set(cx.pos[static_cast<size_t>(x)]);
        cx.squads_pos.push_back(s);
    }
    return cx;
}

bool bag_covered(const ElimContext& cx, const NodeSet& bag) {
    for (const auto& sq : cx.squads_pos)
        if (bag.is_subset_of(sq)) return true;
    return false;
}

}  // namespace

bool tp_exists_oracle(const TPInstance& inst, int max_nodes) {
    ElimContext cx = make_elim_context(inst);
    if (cx.n > max_nodes)
        throw std::invalid_argument("tp_exists_oracle: instance exceeds the node bound");
    if (cx.n == 0) return true;
    if (cx.n > 25) throw std::invalid_argument("tp_exists_oracle: too many nodes");

    const uint32_t full = (cx.n == 32) ? ~0u : ((1u << cx.n) - 1);
    std::vector<char> dp(static_cast<size_t>(full) + 1, 0);
    dp[0] = 1;
    // bag of v after eliminating the set T: v plus everything reachable from v
    // through T in the Gaifman graph
    auto bag_of = [&](int v, uint32_t t) {
        NodeSet bag(cx.n);
        bag.set(v);
        std::vector<int> stack{v};
        NodeSet seen(cx.n);
        seen.set(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            const NodeSet& nb = cx.adj[static_cast<size_t>(x)];
            for (int y = nb.first(); y != -1; y = nb.next(y)) {
                if (seen.test(y)) continue;
                seen.set(y);
                if (t & (1u << y))
                    stack.push_back(y);  // pass through eliminated nodes
                else
                    bag.set(y);
            }
        }
        return bag;
    };
    for (uint32_t s = 1; s <= full; ++s) {
        for (int v = 0; v < cx.n && !dp[s]; ++v) {
            if (!(s & (1u << v))) continue;
            uint32_t prev = s & ~(1u << v);
            if (!dp[prev]) continue;
            if (bag_covered(cx, bag_of(v, prev))) dp[s] = 1;
        }
    }
    return dp[full] != 0;
}

std::vector<Hypergraph> brute_force_minimal_tps(const TPInstance& inst,
                                                const BruteTpOptions& opts) {
    ElimContext cx = make_elim_context(inst);
    if (cx.n > opts.max_nodes)
        throw std::invalid_argument("brute_force_tp: instance exceeds the node bound");
    if (cx.n > 10) throw std::invalid_argument("brute_force_tp: more than 10 covered nodes");

    std::set<std::vector<NodeSet>> outcomes;
    if (cx.n == 0) {
        outcomes.insert({});
    } else {
        // DFS over (eliminated set, fill) states; the reduced bag set of a
        // completed order depends only on the final triangulation, so states
        // can be skipped once seen.
        std::unordered_set<uint64_t> visited;
        const int n = cx.n;
        std::vector<NodeSet> filled = cx.adj;
        std::vector<NodeSet> bags;
        uint32_t elim = 0;

        auto fill_key = [&]() {
            uint64_t f = 0;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (filled[static_cast<size_t>(i)].test(j) &&
                        !cx.adj[static_cast<size_t>(i)].test(j))
                        f |= uint64_t{1} << bit;
            return (f << n) | elim;
        };

        std::function<void()> dfs = [&]() {
            if (elim == (1u << n) - 1) {
                std::vector<NodeSet> reduced;
                for (size_t i = 0; i < bags.size(); ++i) {
                    bool subsumed = false;
                    for (size_t j = 0; j < bags.size(); ++j)
                        if (i != j && (bags[i].is_proper_subset_of(bags[j]) ||
                                       (bags[i] == bags[j] && j < i))) {
                            subsumed = true;
                            break;
                        }
                    if (!subsumed) reduced.push_back(bags[i]);
                }
                std::sort(reduced.begin(), reduced.end());
                outcomes.insert(std::move(reduced));
                return;
            }
            if (!visited.insert(fill_key()).second) return;
            for (int v = 0; v < n; ++v) {
                if (elim & (1u << v)) continue;
                NodeSet nb = filled[static_cast<size_t>(v)];
                for (int u = 0; u < n; ++u)
                    if (elim & (1u << u)) nb.reset(u);
                NodeSet bag = nb;
                bag.set(v);
                if (!bag_covered(cx, bag)) continue;
                // eliminate v: clique over nb, then recurse
                std::vector<std::pair<int, int>> added;
                auto nbv = nb.to_vector();
                for (size_t i = 0; i < nbv.size(); ++i)
                    for (size_t j = i + 1; j < nbv.size(); ++j)
                        if (!filled[static_cast<size_t>(nbv[i])].test(nbv[j])) {
                            filled[static_cast<size_t>(nbv[i])].set(nbv[j]);
                            filled[static_cast<size_t>(nbv[j])].set(nbv[i]);
                            added.emplace_back(nbv[i], nbv[j]);
                        }
                elim |= 1u << v;
                bags.push_back(bag);
                dfs();
                bags.pop_back();
                elim &= ~(1u << v);
                for (auto [a, b] : added) {
                    filled[static_cast<size_t>(a)].reset(b);
                    filled[static_cast<size_t>(b)].reset(a);
                }
            }
        };
        dfs();
    }

    // translate outcomes to hypergraphs, keep valid ones, filter to minima
    std::vector<Hypergraph> cands;
    for (const auto& bags : outcomes) {
        std::vector<Hyperedge> edges;
        int i = 0;
        for (const auto& b : bags)
            edges.push_back(Hyperedge{"t" + std::to_string(i++), cx.to_universe(b)});
        Hypergraph ha(inst.h1.universe(), inst.h1.nodes(), std::move(edges));
        if (is_tree_projection(ha, inst)) cands.push_back(std::move(ha));
    }
    std::vector<Hypergraph> minima;
    for (size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < cands.size() && !dominated; ++j)
            if (i != j && properly_contained_in(cands[j], cands[i])) dominated = true;
        if (!dominated) minima.push_back(cands[i]);
    }
    return minima;
}

std::optional<Hypergraph> brute_force_tp(const TPInstance& inst, const BruteTpOptions& opts) {
    auto minima = brute_force_minimal_tps(inst, opts);
    if (minima.empty()) return std::nullopt;
    return minima.front();
}

// -- minimize ----------------------------------------------------------------

namespace {

// Candidate acceptance: a valid tree projection strictly below the current one.
bool accept_step(const Hypergraph& cand, const Hypergraph& cur, const TPInstance& inst) {
    return properly_contained_in(cand, cur) && is_tree_projection(cand, inst);
}

Hypergraph with_nodes(const Hypergraph& h, const NodeSet& nodes) {
    return Hypergraph(h.universe(), nodes, h.edges());
}

}  // namespace

Hypergraph minimize(const Hypergraph& ha, const TPInstance& inst, const MinimizeOptions& opts) {
    if (auto v = is_tree_projection(ha, inst); !v)
        throw std::invalid_argument("minimize: input is not a tree projection: " + v.detail);

    const NodeSet covered1 = inst.h1.covered_nodes();
    Hypergraph cur = ha;

    // trim edge nodes to the covered nodes of h1 and pin the node set
    {
        std::vector<Hyperedge> edges;
        for (const auto& e : cur.edges()) {
            NodeSet m = e.members & covered1;
            if (!m.empty()) edges.push_back(Hyperedge{e.name, m});
        }
        Hypergraph cand(cur.universe(), inst.h1.nodes(), std::move(edges));
        if (is_tree_projection(cand, inst) && contained_in(cand, cur)) cur = std::move(cand);
    }

    bool progressed = true;
    while (progressed) {
        progressed = false;

        // (a) reduction
        if (!is_reduced(cur)) {
            Hypergraph cand = reduce(cur);
            if (accept_step(cand, cur, inst)) {
                cur = std::move(cand);
                progressed = true;
                continue;
            }
        }

        // (b) trim to the covered nodes of h1
        {
            std::vector<Hyperedge> edges;
            bool changed = false;
            for (const auto& e : cur.edges()) {
                NodeSet m = e.members & covered1;
                if (m != e.members) changed = true;
                if (!m.empty()) edges.push_back(Hyperedge{e.name, m});
            }
            if (changed) {
                Hypergraph cand(cur.universe(), cur.nodes(), std::move(edges));
                if (accept_step(cand, cur, inst)) {
                    cur = std::move(cand);
                    progressed = true;
                    continue;
                }
            }
        }

        // (c) component-splitting rewrite: when an [h]-component of the
        // projection splits into several [h]-components of h1, intersect the
        // touched edges with each piece
        for (int hi = 0; hi < cur.edge_count() && !progressed; ++hi) {
            const NodeSet& h = cur.edge(hi).members;
            auto comps_a = v_components(cur, h);
            auto comps_1 = v_components(inst.h1, h);
            for (const auto& ca : comps_a) {
                std::vector<NodeSet> pieces;
                for (const auto& c1 : comps_1)
                    if (c1.is_subset_of(ca)) pieces.push_back(c1);
                if (pieces.size() <= 1) continue;
                std::vector<Hyperedge> edges;
                int idx = 0;
                for (const auto& e : cur.edges()) {
                    if (!e.members.intersects(ca)) {
                        edges.push_back(e);
                        continue;
                    }
                    for (const auto& piece : pieces) {
                        NodeSet m = e.members & (piece | h);
                        if (!m.empty())
                            edges.push_back(Hyperedge{"c" + std::to_string(idx++), m});
                    }
                }
                Hypergraph cand(cur.universe(), cur.nodes(), std::move(edges));
                if (accept_step(cand, cur, inst)) {
                    cur = std::move(cand);
                    progressed = true;
                    break;
                }
            }
        }
        if (progressed) continue;

        // (d) drop an edge, shave one node, or clip an edge to a resource
        for (int ei = 0; ei < cur.edge_count() && !progressed; ++ei) {
            const Hyperedge& e = cur.edge(ei);
            std::vector<NodeSet> tries;
            {
                // whole-edge removal first, then single-node shaves, then
                // intersections with the resource edges
                for (int x = e.members.first(); x != -1; x = e.members.next(x)) {
                    NodeSet s = e.members;
                    s.reset(x);
                    if (!s.empty()) tries.push_back(s);
                }
                for (const auto& r : inst.h2.edges()) {
                    NodeSet s = e.members & r.members;
                    if (!s.empty() && s != e.members) tries.push_back(s);
                }
            }
            {
                std::vector<Hyperedge> edges;
                for (int j = 0; j < cur.edge_count(); ++j)
                    if (j != ei) edges.push_back(cur.edge(j));
                if (!edges.empty()) {
                    Hypergraph cand(cur.universe(), cur.nodes(), std::move(edges));
                    if (accept_step(cand, cur, inst)) {
                        cur = std::move(cand);
                        progressed = true;
                        break;
                    }
                }
            }
            for (const auto& s : tries) {
                std::vector<Hyperedge> edges;
                for (int j = 0; j < cur.edge_count(); ++j)
                    if (j != ei) edges.push_back(cur.edge(j));
                edges.push_back(Hyperedge{e.name, s});
                Hypergraph cand(cur.universe(), cur.nodes(), std::move(edges));
                if (accept_step(cand, cur, inst)) {
                    cur = std::move(cand);
                    progressed = true;
                    break;
                }
            }
        }
        if (progressed) continue;

        // (e) exhaustive descent within the small-instance bound
        if (inst.h1.covered_nodes().count() <= opts.exhaustive_node_bound) {
            for (const auto& t : brute_force_minimal_tps(inst)) {
                if (properly_contained_in(t, cur)) {
                    cur = with_nodes(t, cur.nodes());
                    progressed = true;
                    break;
                }
            }
        }
    }

    Hypergraph out = cur.covered_nodes().is_subset_of(inst.h1.nodes())
                         ? with_nodes(cur, inst.h1.nodes())
                         : cur;
    if (auto v = is_tree_projection(out, inst); !v)
        throw std::logic_error("minimize: descent left an invalid projection: " + v.detail);
    return out;
}

// -- component-tree construction ---------------------------------------------

namespace {

struct ComponentTreeBuilder {
    const Hypergraph& ha;
    const Hypergraph& h1ref;
    std::vector<int> parent;

    // Attaches a subtree decomposing component c under vertex r; returns the
    // chosen child or -1 when no assignment exists.
    int build(int r, const NodeSet& c) {
        const NodeSet& hr = ha.edge(r).members;
        NodeSet fr = frontier(h1ref, c);
        for (int s = 0; s < ha.edge_count(); ++s) {
            const NodeSet& hs = ha.edge(s).members;
            if (!hs.intersects(c)) continue;
            if (!hs.is_subset_of(c | hr)) continue;
            if (!hs.is_subset_of(fr)) continue;

            auto comps = v_components(h1ref, hs);
            std::vector<NodeSet> pieces;
            bool leak = false;
            for (const auto& cc : comps) {
                if (!cc.intersects(c)) continue;
                if (!cc.is_subset_of(c)) {
                    leak = true;
                    break;
                }
                pieces.push_back(cc);
            }
            if (leak) continue;

            // every other edge touching c must fall into exactly one piece
            bool placeable = true;
            for (int e = 0; e < ha.edge_count() && placeable; ++e) {
                if (e == s || !ha.edge(e).members.intersects(c)) continue;
                int hits = 0;
                for (const auto& piece : pieces)
                    if (ha.edge(e).members.intersects(piece)) ++hits;
                if (hits != 1) placeable = false;
            }
            if (!placeable) continue;

            std::vector<int> saved = parent;
            parent[static_cast<size_t>(s)] = r;
            bool ok = true;
            for (const auto& piece : pieces)
                if (build(s, piece) == -1) {
                    ok = false;
                    break;
                }
            if (ok) return s;
            parent = std::move(saved);
        }
        return -1;
    }
};

}  // namespace

std::optional<JoinTree> construct_component_tree(const Hypergraph& ha, const Hypergraph& h1ref,
                                                 const NodeSet& root_edge) {
    if (!ha.same_universe(h1ref))
        throw std::invalid_argument("construct_component_tree: different universes");
    if (!is_reduced(ha))
        throw std::invalid_argument("construct_component_tree: hypergraph is not reduced");
    if (!is_acyclic(ha))
        throw std::invalid_argument("construct_component_tree: hypergraph is cyclic");
    int root = ha.edge_index(root_edge);
    if (root == -1)
        throw std::invalid_argument("construct_component_tree: root is not a hyperedge");
    if (ha.nodes() != h1ref.nodes() || !leq(h1ref, ha))
        throw std::invalid_argument(
            "construct_component_tree: reference must share nodes and be covered");

    ComponentTreeBuilder b{ha, h1ref, std::vector<int>(static_cast<size_t>(ha.edge_count()), -2)};
    b.parent[static_cast<size_t>(root)] = -1;
    for (const auto& comp : v_components(h1ref, ha.edge(root).members))
        if (b.build(root, comp) == -1) return std::nullopt;
    // an edge never placed means the decomposition cannot exist from this root
    for (int i = 0; i < ha.edge_count(); ++i)
        if (b.parent[static_cast<size_t>(i)] == -2) return std::nullopt;
    return JoinTree{ha, std::move(b.parent), root};
}

// -- report -------------------------------------------------------------------

TPReport check_minimality_conditions(const Hypergraph& ha, const TPInstance& inst) {
    TPReport rep;
    rep.valid = static_cast<bool>(is_tree_projection(ha, inst));
    if (!rep.valid) return rep;

    rep.reduced = is_reduced(ha);
    rep.nodes_preserved = (ha.covered_nodes() == inst.h1.covered_nodes());

    rep.components_preserved = true;
    for (const auto& e : ha.edges()) {
        auto ca = v_components(ha, e.members);
        auto c1 = v_components(inst.h1, e.members);
        std::sort(ca.begin(), ca.end());
        std::sort(c1.begin(), c1.end());
        if (ca != c1) {
            rep.components_preserved = false;
            break;
        }
    }

    bool checkable = rep.reduced && ha.nodes() == inst.h1.nodes() && leq(inst.h1, ha);
    rep.h1_connected_all_roots = checkable;
    if (checkable) {
        if (auto jt = build_join_tree(ha)) {
            if (!is_h1_connected(*jt, inst.h1)) rep.h1_connected_all_roots = false;
        }
    }
    for (const auto& e : ha.edges()) {
        TPReport::Witness w;
        w.root = e.name;
        if (!checkable) {
            w.error = "owner must be reduced with the nodes of h1";
            rep.normal_form_witnesses.push_back(std::move(w));
            continue;
        }
        auto jt = construct_component_tree(ha, inst.h1, e.members);
        if (!jt) {
            w.error = "no component tree from this root";
        } else {
            // connectivity is tracked over every tree actually built
            if (!is_h1_connected(*jt, inst.h1)) rep.h1_connected_all_roots = false;
            if (auto nf = is_normal_form(*jt, inst.h1); !nf)
                w.error = nf.detail;
            else
                w.tree = std::move(*jt);
        }
        rep.normal_form_witnesses.push_back(std::move(w));
    }
    return rep;
}

// -- strategy from a projection ------------------------------------------------

GameTree tp_to_strategy(const Hypergraph& ha, const TPInstance& inst,
                        const std::optional<NodeSet>& root_edge) {
    if (auto v = is_tree_projection(ha, inst); !v)
        throw std::invalid_argument("tp_to_strategy: not a tree projection: " + v.detail);
    Hypergraph minha = minimize(ha, inst);

    NodeSet root = root_edge.value_or(minha.edge(0).members);
    if (minha.edge_index(root) == -1) {
        if (root_edge && ha.edge_index(*root_edge) != -1)
            throw std::invalid_argument(
                "tp_to_strategy: requested root was removed by minimization");
        throw std::invalid_argument("tp_to_strategy: root is not an edge of the projection");
    }

    auto jt = construct_component_tree(minha, inst.h1, root);
    if (!jt) throw std::logic_error("tp_to_strategy: no normal-form join tree from this root");

    auto squad_for = [&](const NodeSet& cops) {
        for (int i = 0; i < inst.h2.edge_count(); ++i)
            if (cops.is_subset_of(inst.h2.edge(i).members)) return i;
        throw std::logic_error("tp_to_strategy: projection edge fits no squad");
    };

    // component decomposed by each vertex -> the move to play there
    std::map<NodeSet, Position> moves;
    const NodeSet root_members = jt->owner.edge(jt->root).members;
    moves.emplace(inst.h1.nodes(), Position{root_members, squad_for(root_members)});
    auto ch = jt->children();
    // walk the tree pairing each child with the component it decomposes
    std::vector<int> stack{jt->root};
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int s : ch[static_cast<size_t>(r)]) {
            NodeSet c = jt->subtree_nodes(s) - jt->owner.edge(r).members;
            const NodeSet& hs = jt->owner.edge(s).members;
            moves.emplace(c, Position{hs, squad_for(hs)});
            stack.push_back(s);
        }
    }

    std::string err;
    auto tree = unfold_positional(inst.h1, inst.h2, moves, &err);
    if (!tree) throw std::logic_error("tp_to_strategy: unfolding failed: " + err);
    if (auto v = verify_strategy(*tree, inst.h1, inst.h2); !v)
        throw std::logic_error("tp_to_strategy: read-off strategy invalid: " + v.detail);
    if (!is_monotone(*tree, inst.h1))
        throw std::logic_error("tp_to_strategy: read-off strategy is not monotone");
    return *tree;
}

// -- width deciders -------------------------------------------------------------

namespace {

// Smallest cover of `target` by at most k edges of h, as indices; empty
// optional when none exists.
std::optional<std::vector<int>> bounded_cover(const Hypergraph& h, const NodeSet& target, int k) {
    std::vector<int> pick;
    std::function<std::optional<std::vector<int>>(NodeSet, int, int)> rec =
        [&](NodeSet missing, int start, int budget) -> std::optional<std::vector<int>> {
        if (missing.empty()) return pick;
        if (budget == 0) return std::nullopt;
        for (int i = start; i < h.edge_count(); ++i) {
            if (!h.edge(i).members.intersects(missing)) continue;
            pick.push_back(i);
            auto r = rec(missing - h.edge(i).members, i + 1, budget - 1);
            if (r) return r;
            pick.pop_back();
        }
        return std::nullopt;
    };
    return rec(target, 0, k);
}

}  // namespace

std::optional<GhwResult> ghw_decide(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("ghw_decide: k must be >= 1");
    TPInstance inst(h, power_k(h, k));
    auto tp = find_tp(inst);
    if (!tp) return std::nullopt;

    auto jt = build_join_tree(*tp);
    if (!jt) throw std::logic_error("ghw_decide: projection is not acyclic");
    HypertreeDecomposition hd;
    hd.universe = h.universe();
    hd.parent = jt->parent;
    hd.root = jt->root;
    for (int i = 0; i < tp->edge_count(); ++i) {
        hd.chi.push_back(tp->edge(i).members);
        auto cover = bounded_cover(h, tp->edge(i).members, k);
        if (!cover) throw std::logic_error("ghw_decide: no bounded cover for a projection edge");
        hd.lambda.push_back(*cover);
    }
    auto verdict = verify_hypertree_decomposition(h, hd, true);
    if (!verdict.ok() || *verdict.width > k)
        throw std::logic_error("ghw_decide: produced decomposition failed verification");
    return GhwResult{std::move(*tp), std::move(hd), *verdict.width};
}

std::optional<TwResult> tw_decide(const Hypergraph& h, int k, long max_cluster_edges) {
    if (k < 0) throw std::invalid_argument("tw_decide: k must be >= 0");
    TPInstance inst(h, clusters_tk(h, k, max_cluster_edges));
    auto tp = find_tp(inst);
    if (!tp) return std::nullopt;

    auto jt = build_join_tree(*tp);
    if (!jt) throw std::logic_error("tw_decide: projection is not acyclic");
    TreeDecomposition td;
    td.universe = h.universe();
    td.parent = jt->parent;
    td.root = jt->root;
    for (int i = 0; i < tp->edge_count(); ++i) td.chi.push_back(tp->edge(i).members);
    auto verdict = verify_tree_decomposition(h, td);
    if (!verdict.ok() || *verdict.width > k)
        throw std::logic_error("tw_decide: produced decomposition failed verification");
    return TwResult{std::move(*tp), std::move(td), *verdict.width};
}

}  // namespace tpj
