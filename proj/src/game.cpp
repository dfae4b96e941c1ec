#include "tpj/game.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace tpj {

NodeSet escape_door(const Hypergraph& h1, const Configuration& cfg, const NodeSet& next_cops) {
    if (cfg.is_capture()) throw std::invalid_argument("escape_door: capture configuration");
    NodeSet ed = border(h1, cfg.component) - next_cops;
    if (!cfg.position.cops.empty()) {
        NodeSet alt = (cfg.position.cops & frontier(h1, cfg.component)) - next_cops;
        if (alt != ed)
            throw std::invalid_argument(
                "escape_door: component is not a [cops]-component of h1");
    }
    return ed;
}

std::vector<Position> legal_moves(const Hypergraph& h1, const Hypergraph& h2,
                                  const Configuration& cfg, int max_frontier_bits) {
    if (cfg.is_capture()) throw std::invalid_argument("legal_moves: capture configuration");
    NodeSet fr = frontier(h1, cfg.component);
    std::map<NodeSet, int> dedup;
    for (int i = 0; i < h2.edge_count(); ++i) {
        NodeSet base = h2.edge(i).members & fr;
        if (base.empty()) continue;
        auto bits = base.to_vector();
        if (static_cast<int>(bits.size()) > max_frontier_bits)
            throw std::invalid_argument("legal_moves: frontier too large to enumerate");
        for (uint64_t mask = 1; mask < (uint64_t{1} << bits.size()); ++mask) {
            NodeSet cops(h1.universe()->size());
            for (size_t b = 0; b < bits.size(); ++b)
                if (mask & (uint64_t{1} << b)) cops.set(bits[b]);
            dedup.emplace(cops, i);
        }
    }
    std::vector<Position> out;
    out.reserve(dedup.size());
    for (auto& [cops, squad] : dedup) out.push_back(Position{cops, squad});
    return out;
}

std::vector<NodeSet> robber_components(const Hypergraph& h1, const Configuration& cfg,
                                       const NodeSet& next_cops) {
    if (cfg.is_capture()) throw std::invalid_argument("robber_components: capture configuration");
    NodeSet target = cfg.component | (border(h1, cfg.component) - next_cops);
    std::vector<NodeSet> out;
    for (auto& comp : v_components(h1, next_cops))
        if (comp.intersects(target)) out.push_back(std::move(comp));
    return out;
}

bool is_monotone(const GameTree& t, const Hypergraph& h1) {
    for (const auto& v : t.verts) {
        if (v.children.empty()) continue;
        const NodeSet& next = t.verts[static_cast<size_t>(v.children.front())].cops;
        if (!(border(h1, v.component) - next).empty()) return false;
    }
    return true;
}

long strategy_size(const GameTree& t) {
    long total = 0;
    for (const auto& v : t.verts) total += v.cops.count();
    return total;
}

// -- solve ----------------------------------------------------------------

namespace {

struct MemoEntry {
    bool win = false;
    int squad = -1;
};

class MonotoneSolver {
public:
    MonotoneSolver(const Hypergraph& h1, const Hypergraph& h2) : h1_(h1), h2_(h2) {}

    bool win(const NodeSet& comp) {
        auto it = memo_.find(comp);
        if (it != memo_.end()) return it->second.win;
        memo_.emplace(comp, MemoEntry{});  // placeholder; children are strictly smaller
        NodeSet fr = frontier(h1_, comp);
        NodeSet bd = fr - comp;
        MemoEntry entry;
        for (int i = 0; i < h2_.edge_count(); ++i) {
            const NodeSet& squad = h2_.edge(i).members;
            if (!bd.is_subset_of(squad)) continue;
            NodeSet m = squad & fr;
            if (!m.intersects(comp)) continue;  // no progress
            bool all = true;
            for (const auto& sub : v_components(h1_, m)) {
                if (!sub.intersects(comp)) continue;
                if (!win(sub)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                entry = MemoEntry{true, i};
                break;
            }
        }
        memo_[comp] = entry;
        return entry.win;
    }

    // Expands the winning play below a component into the tree.
    void emit(GameTree& t, int parent, const Position& pos, const NodeSet& comp) {
        int v = static_cast<int>(t.verts.size());
        t.verts.push_back(GameVertex{pos.cops, pos.squad, comp, parent, {}});
        if (parent != -1) t.verts[static_cast<size_t>(parent)].children.push_back(v);
        if (comp.empty()) return;
        const MemoEntry& e = memo_.at(comp);
        NodeSet m = h2_.edge(e.squad).members & frontier(h1_, comp);
        Position next{m, e.squad};
        bool any = false;
        for (const auto& sub : v_components(h1_, m)) {
            if (!sub.intersects(comp)) continue;
            any = true;
            emit(t, v, next, sub);
        }
        if (!any) emit(t, v, next, NodeSet(h1_.universe()->size()));
    }

private:
    const Hypergraph& h1_;
    const Hypergraph& h2_;
    std::unordered_map<NodeSet, MemoEntry> memo_;
};

}  // namespace

std::optional<GameTree> solve(const Hypergraph& h1, const Hypergraph& h2,
                              const std::optional<NodeSet>& first_move) {
    if (!h1.same_universe(h2)) throw std::invalid_argument("solve: different universes");
    if (h1.nodes().empty()) throw std::invalid_argument("solve: h1 has no nodes");

    MonotoneSolver solver(h1, h2);
    GameTree t;
    const NodeSet all = h1.nodes();

    if (first_move) {
        const NodeSet& cops = *first_move;
        if (cops.empty()) throw std::invalid_argument("solve: forced first move is empty");
        if (!cops.is_subset_of(frontier(h1, all)))
            throw std::invalid_argument("solve: forced first move outside the frontier");
        int squad = -1;
        for (int i = 0; i < h2.edge_count(); ++i)
            if (cops.is_subset_of(h2.edge(i).members)) {
                squad = i;
                break;
            }
        if (squad == -1) throw std::invalid_argument("solve: forced first move fits no squad");
        auto comps = v_components(h1, cops);
        for (const auto& c : comps)
            if (!solver.win(c)) return std::nullopt;
        t.verts.push_back(GameVertex{NodeSet(h1.universe()->size()), -1, all, -1, {}});
        Position pos{cops, squad};
        bool any = false;
        for (const auto& c : comps) {
            any = true;
            solver.emit(t, 0, pos, c);
        }
        if (!any) solver.emit(t, 0, pos, NodeSet(h1.universe()->size()));
        return t;
    }

    if (!solver.win(all)) return std::nullopt;
    solver.emit(t, -1, Position{NodeSet(h1.universe()->size()), -1}, all);
    return t;
}

// -- brute_solve ----------------------------------------------------------

namespace {

struct BruteMove {
    NodeSet cops;
    int squad;
    std::vector<int> succ;
};

struct BruteState {
    NodeSet comp;
    std::vector<BruteMove> moves;
    long rank = -1;  // mark time in the fixpoint; -1 = Robber wins
    int win_move = -1;
};

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e9b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::optional<GameTree> brute_solve(const Hypergraph& h1, const Hypergraph& h2,
                                    const BruteOptions& opts) {
    if (!h1.same_universe(h2)) throw std::invalid_argument("brute_solve: different universes");
    if (h1.nodes().empty()) throw std::invalid_argument("brute_solve: h1 has no nodes");
    if (h1.nodes().count() > opts.max_nodes)
        throw std::invalid_argument("brute_solve: instance exceeds the node bound");

    std::vector<BruteState> states;
    std::map<NodeSet, int> ids;

    auto intern = [&](const NodeSet& comp) {
        auto it = ids.find(comp);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(states.size());
        ids.emplace(comp, id);
        states.push_back(BruteState{comp, {}, -1, -1});
        return id;
    };

    const NodeSet all = h1.nodes();
    int root_id = intern(all);

    // discover the reachable component space
    for (int cur = 0; cur < static_cast<int>(states.size()); ++cur) {
        NodeSet comp = states[static_cast<size_t>(cur)].comp;
        NodeSet fr = frontier(h1, comp);
        NodeSet bd = fr - comp;
        std::map<NodeSet, int> cand;
        for (int i = 0; i < h2.edge_count(); ++i) {
            NodeSet base = h2.edge(i).members & fr;
            if (base.empty()) continue;
            auto bits = base.to_vector();
            for (uint64_t mask = 1; mask < (uint64_t{1} << bits.size()); ++mask) {
                NodeSet cops(h1.universe()->size());
                for (size_t b = 0; b < bits.size(); ++b)
                    if (mask & (uint64_t{1} << b)) cops.set(bits[b]);
                cand.emplace(cops, i);
            }
        }
        for (auto& [cops, squad] : cand) {
            BruteMove mv{cops, squad, {}};
            NodeSet target = comp | (bd - cops);
            for (const auto& sub : v_components(h1, cops))
                if (sub.intersects(target)) mv.succ.push_back(intern(sub));
            states[static_cast<size_t>(cur)].moves.push_back(std::move(mv));
        }
    }

    // least fixpoint of "some move leads only to marked states"
    long stamp = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& st : states) {
            if (st.rank != -1) continue;
            for (size_t mi = 0; mi < st.moves.size(); ++mi) {
                bool all_marked = true;
                for (int s : st.moves[mi].succ)
                    if (states[static_cast<size_t>(s)].rank == -1) {
                        all_marked = false;
                        break;
                    }
                if (all_marked) {
                    st.rank = ++stamp;
                    st.win_move = static_cast<int>(mi);
                    changed = true;
                    break;
                }
            }
        }
    }

    if (states[static_cast<size_t>(root_id)].rank == -1) return std::nullopt;

    // unfold; with the bias on, prefer moves with a non-empty escape door
    // among those whose successors were all marked earlier
    GameTree t;
    struct Item {
        int parent;
        Position pos;
        int state;
    };
    std::deque<Item> queue{{-1, Position{NodeSet(h1.universe()->size()), -1}, root_id}};
    while (!queue.empty()) {
        Item it = queue.front();
        queue.pop_front();
        const BruteState& st = states[static_cast<size_t>(it.state)];
        int v = static_cast<int>(t.verts.size());
        t.verts.push_back(GameVertex{it.pos.cops, it.pos.squad, st.comp, it.parent, {}});
        if (it.parent != -1) t.verts[static_cast<size_t>(it.parent)].children.push_back(v);

        int chosen = st.win_move;
        if (opts.prefer_nonmonotone) {
            long best_key = -1;
            NodeSet bd = border(h1, st.comp);
            for (size_t mi = 0; mi < st.moves.size(); ++mi) {
                bool ok = true;
                for (int s : st.moves[mi].succ)
                    if (states[static_cast<size_t>(s)].rank == -1 ||
                        states[static_cast<size_t>(s)].rank >= st.rank) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                bool nonmono = !(bd - st.moves[mi].cops).empty();
                long key = (nonmono ? (1ll << 40) : 0) +
                           static_cast<long>(mix64(opts.seed ^ mix64(st.moves[mi].cops.hash() +
                                                                     static_cast<uint64_t>(mi))) &
                                             0xffffffffull);
                if (key > best_key) {
                    best_key = key;
                    chosen = static_cast<int>(mi);
                }
            }
        }
        const BruteMove& mv = st.moves[static_cast<size_t>(chosen)];
        Position pos{mv.cops, mv.squad};
        if (mv.succ.empty()) {
            int leaf = static_cast<int>(t.verts.size());
            t.verts.push_back(
                GameVertex{pos.cops, pos.squad, NodeSet(h1.universe()->size()), v, {}});
            t.verts[static_cast<size_t>(v)].children.push_back(leaf);
        } else {
            for (int s : mv.succ) queue.push_back(Item{v, pos, s});
        }
    }
    // BFS insertion leaves children lists in discovery order; rebuild parent
    // links were set inline, so the tree is complete here.
    return t;
}

// -- verify / monotonize ----------------------------------------------------

CheckResult verify_strategy(const GameTree& t, const Hypergraph& h1, const Hypergraph& h2) {
    if (t.verts.empty()) return CheckResult::fail("empty game tree");
    if (t.root < 0 || t.root >= static_cast<int>(t.verts.size()))
        return CheckResult::fail("root out of range");
    const auto& root = t.verts[static_cast<size_t>(t.root)];
    if (!root.cops.empty() || root.parent != -1)
        return CheckResult::fail("root must carry the empty position");
    if (root.component != h1.nodes())
        return CheckResult::fail("root component must be nodes(h1)");

    // structural pass
    size_t reach = 0;
    std::vector<bool> seen(t.verts.size(), false);
    std::deque<int> q{t.root};
    seen[static_cast<size_t>(t.root)] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++reach;
        for (int c : t.verts[static_cast<size_t>(v)].children) {
            if (c < 0 || c >= static_cast<int>(t.verts.size()))
                return CheckResult::fail("child index out of range");
            if (seen[static_cast<size_t>(c)]) return CheckResult::fail("vertex reached twice");
            if (t.verts[static_cast<size_t>(c)].parent != v)
                return CheckResult::fail("parent link mismatch");
            seen[static_cast<size_t>(c)] = true;
            q.push_back(c);
        }
    }
    if (reach != t.verts.size()) return CheckResult::fail("unreachable vertices present");

    for (size_t vi = 0; vi < t.verts.size(); ++vi) {
        const auto& v = t.verts[vi];
        if (v.component.empty()) {
            if (!v.children.empty()) return CheckResult::fail("capture vertex has children");
            continue;
        }
        if (static_cast<int>(vi) != t.root) {
            if (v.squad < 0 || v.squad >= h2.edge_count())
                return CheckResult::fail("vertex has no valid squad");
            if (!v.cops.is_subset_of(h2.edge(v.squad).members))
                return CheckResult::fail("cops are not within their squad");
            bool genuine = false;
            for (const auto& c : v_components(h1, v.cops))
                if (c == v.component) {
                    genuine = true;
                    break;
                }
            if (!genuine)
                return CheckResult::fail("component is not a [cops]-component of h1");
        }
        if (v.children.empty())
            return CheckResult::fail("branch does not reach capture (vertex " +
                                     std::to_string(vi) + ")");
        const auto& first = t.verts[static_cast<size_t>(v.children.front())];
        for (int c : v.children) {
            const auto& cv = t.verts[static_cast<size_t>(c)];
            if (cv.cops != first.cops || cv.squad != first.squad)
                return CheckResult::fail("children of one vertex play different moves");
        }
        if (!first.cops.is_subset_of(frontier(h1, v.component)))
            return CheckResult::fail("illegal move: cops leave the frontier (vertex " +
                                     std::to_string(vi) + ")");
        auto expected = robber_components(h1, t.config(static_cast<int>(vi)), first.cops);
        if (expected.empty()) {
            if (v.children.size() != 1 ||
                !t.verts[static_cast<size_t>(v.children.front())].component.empty())
                return CheckResult::fail("capture move must have exactly the capture child");
        } else {
            std::vector<NodeSet> got;
            for (int c : v.children) got.push_back(t.verts[static_cast<size_t>(c)].component);
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            if (got != expected)
                return CheckResult::fail("children do not match the escape components (vertex " +
                                         std::to_string(vi) + ")");
        }
    }
    return CheckResult::pass();
}

namespace {

// Deep copies the subtree at `src` into `dst`, optionally overriding the
// position of the copied root.
int copy_subtree(const GameTree& from, int src, GameTree& dst, int parent,
                 const std::optional<Position>& override_pos) {
    const auto& s = from.verts[static_cast<size_t>(src)];
    int v = static_cast<int>(dst.verts.size());
    Position pos = override_pos ? *override_pos : Position{s.cops, s.squad};
    dst.verts.push_back(GameVertex{pos.cops, pos.squad, s.component, parent, {}});
    if (parent != -1) dst.verts[static_cast<size_t>(parent)].children.push_back(v);
    for (int c : s.children) copy_subtree(from, c, dst, v, std::nullopt);
    return v;
}

}  // namespace

GameTree monotonize(const GameTree& input, const Hypergraph& h1, const Hypergraph& h2) {
    if (auto v = verify_strategy(input, h1, h2); !v)
        throw std::invalid_argument("monotonize: input is not a winning strategy: " + v.detail);

    GameTree t = input;
    while (true) {
        // shallowest edge r->s with a non-empty escape door
        int r = -1;
        NodeSet ed;
        {
            std::deque<int> q{t.root};
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                const auto& vv = t.verts[static_cast<size_t>(v)];
                if (!vv.children.empty() && !vv.component.empty()) {
                    NodeSet d = border(h1, vv.component) -
                                t.verts[static_cast<size_t>(vv.children.front())].cops;
                    if (!d.empty() && vv.parent != -1) {
                        r = v;
                        ed = d;
                        break;
                    }
                }
                for (int c : vv.children) q.push_back(c);
            }
        }
        if (r == -1) return t;

        const auto& rv = t.verts[static_cast<size_t>(r)];
        int p = rv.parent;
        Position new_pos{rv.cops - ed, rv.squad};
        Position ms = t.move_at(r);

        // component of the relaxed position that swallows C_r and the door
        NodeSet cr_prime;
        for (const auto& c : v_components(h1, new_pos.cops))
            if (c.intersects(rv.component)) {
                cr_prime = c;
                break;
            }
        if (!(rv.component | ed).is_subset_of(cr_prime))
            throw std::logic_error("monotonize: relaxed component does not absorb the door");

        GameTree next;
        next.root = 0;
        // copy everything outside p's subtree by walking from the root
        std::map<int, int> placed;  // old vertex -> new vertex, for ancestors
        {
            // path from root to p
            std::vector<int> path;
            for (int v = p; v != -1; v = t.verts[static_cast<size_t>(v)].parent)
                path.push_back(v);
            std::reverse(path.begin(), path.end());
            int parent_new = -1;
            for (size_t pi = 0; pi < path.size(); ++pi) {
                int old_v = path[pi];
                const auto& ov = t.verts[static_cast<size_t>(old_v)];
                int nv = static_cast<int>(next.verts.size());
                next.verts.push_back(GameVertex{ov.cops, ov.squad, ov.component, parent_new, {}});
                if (parent_new != -1)
                    next.verts[static_cast<size_t>(parent_new)].children.push_back(nv);
                placed[old_v] = nv;
                // siblings off the path keep their whole subtrees
                int on_path_child = (pi + 1 < path.size()) ? path[pi + 1] : -1;
                for (int c : ov.children)
                    if (c != on_path_child && old_v != p)
                        copy_subtree(t, c, next, nv, std::nullopt);
                parent_new = nv;
            }
        }
        int p_new = placed.at(p);

        // children of p: keep those outside cr_prime, relabelled to the
        // relaxed position
        for (int c : t.verts[static_cast<size_t>(p)].children) {
            if (t.verts[static_cast<size_t>(c)].component.intersects(cr_prime)) continue;
            copy_subtree(t, c, next, p_new, new_pos);
        }
        // the absorbed branch restarts at (M_r', C_r') and replays M_s
        int r_new = static_cast<int>(next.verts.size());
        next.verts.push_back(GameVertex{new_pos.cops, new_pos.squad, cr_prime, p_new, {}});
        next.verts[static_cast<size_t>(p_new)].children.push_back(r_new);

        auto escape = robber_components(
            h1, Configuration{new_pos, cr_prime}, ms.cops);
        if (escape.empty()) {
            int leaf = static_cast<int>(next.verts.size());
            next.verts.push_back(
                GameVertex{ms.cops, ms.squad, NodeSet(h1.universe()->size()), r_new, {}});
            next.verts[static_cast<size_t>(r_new)].children.push_back(leaf);
        } else {
            for (const auto& comp : escape) {
                int old_child = -1;
                for (int c : t.verts[static_cast<size_t>(r)].children)
                    if (t.verts[static_cast<size_t>(c)].component == comp) {
                        old_child = c;
                        break;
                    }
                if (old_child == -1)
                    throw std::logic_error(
                        "monotonize: rewrite produced an escape component with no subtree");
                copy_subtree(t, old_child, next, r_new, std::nullopt);
            }
        }
        t = std::move(next);
    }
}

std::optional<GameTree> unfold_positional(const Hypergraph& h1, const Hypergraph& h2,
                                          const std::map<NodeSet, Position>& moves,
                                          std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return std::nullopt;
    };
    GameTree t;
    t.verts.push_back(
        GameVertex{NodeSet(h1.universe()->size()), -1, h1.nodes(), -1, {}});

    struct Frame {
        int vertex;
        NodeSet on_path;  // interned component keys seen along the path
    };
    // depth-first with an explicit per-path component trail
    std::vector<std::pair<int, std::vector<NodeSet>>> stack{{0, {}}};
    while (!stack.empty()) {
        auto [v, trail] = std::move(stack.back());
        stack.pop_back();
        const GameVertex vert = t.verts[static_cast<size_t>(v)];
        if (vert.component.empty()) continue;
        for (const auto& prev : trail)
            if (prev == vert.component)
                return fail("repetition: component revisited along a path");
        auto it = moves.find(vert.component);
        if (it == moves.end())
            return fail("no move defined for a reached component");
        const Position& mv = it->second;
        if (mv.squad < 0 || mv.squad >= h2.edge_count() ||
            !mv.cops.is_subset_of(h2.edge(mv.squad).members))
            return fail("move is not a position of h2");
        if (!mv.cops.is_subset_of(frontier(h1, vert.component)))
            return fail("illegal move: cops leave the frontier");
        auto trail2 = trail;
        trail2.push_back(vert.component);
        auto comps = robber_components(h1, t.config(v), mv.cops);
        if (comps.empty()) {
            int leaf = static_cast<int>(t.verts.size());
            t.verts.push_back(
                GameVertex{mv.cops, mv.squad, NodeSet(h1.universe()->size()), v, {}});
            t.verts[static_cast<size_t>(v)].children.push_back(leaf);
            continue;
        }
        for (const auto& comp : comps) {
            int c = static_cast<int>(t.verts.size());
            t.verts.push_back(GameVertex{mv.cops, mv.squad, comp, v, {}});
            t.verts[static_cast<size_t>(v)].children.push_back(c);
            stack.push_back({c, trail2});
        }
    }
    return t;
}

}  // namespace tpj
