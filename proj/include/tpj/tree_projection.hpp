#ifndef TPJ_TREE_PROJECTION_HPP
#define TPJ_TREE_PROJECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpj/decomposition.hpp"
#include "tpj/game.hpp"
#include "tpj/hypergraph.hpp"
#include "tpj/join_tree.hpp"

namespace tpj {

// The pair (h1, h2): h1 is covered, h2 supplies the resources.
struct TPInstance {
    Hypergraph h1;
    Hypergraph h2;

    TPInstance(Hypergraph a, Hypergraph b);
};

// Necessary-condition report for minimality. All flags are recomputed from
// scratch; all-true does not certify minimality.
struct TPReport {
    bool valid = false;
    bool reduced = false;
    bool nodes_preserved = false;
    bool components_preserved = false;
    bool h1_connected_all_roots = false;

    struct Witness {
        std::string root;
        std::optional<JoinTree> tree;
        std::string error;
    };
    std::vector<Witness> normal_form_witnesses;

    bool all_necessary_hold() const;
};

// leq(h1, ha) && leq(ha, h2) && is_acyclic(ha); names the failing condition.
CheckResult is_tree_projection(const Hypergraph& ha, const TPInstance& inst);

// Tree projection via the game: solve, then read the edges off the monotone
// strategy. none iff the solver finds no winning strategy.
std::optional<Hypergraph> find_tp(const TPInstance& inst);

// Edges = distinct non-empty positions of the game tree, over nodes(h1).
// Rejects non-monotone or losing strategies; the result is re-verified.
Hypergraph strategy_to_tp(const GameTree& t, const TPInstance& inst);

// Monotone winning strategy read off a normal-form join tree of the minimized
// projection: at (h_r, C) play the child whose decomposed component is C.
// root_edge overrides the default lexicographically-least root.
GameTree tp_to_strategy(const Hypergraph& ha, const TPInstance& inst,
                        const std::optional<NodeSet>& root_edge = std::nullopt);

struct MinimizeOptions {
    // Node budget for the exhaustive descent step; instances at most this
    // large come out globally subset-minimal.
    int exhaustive_node_bound = 8;
};

// Containment descent: reduction, trimming to the covered nodes of h1,
// the component-splitting rewrite, per-edge subset replacement, and (within
// the bound) exhaustive descent to a globally minimal projection.
Hypergraph minimize(const Hypergraph& ha, const TPInstance& inst, const MinimizeOptions& = {});

TPReport check_minimality_conditions(const Hypergraph& ha, const TPInstance& inst);

// Backtracking construction of a component tree of ha rooted at root_edge,
// with components read from h1ref. Succeeds whenever ha is reduced, acyclic
// and the component structure matches (h1ref = ha always works).
std::optional<JoinTree> construct_component_tree(const Hypergraph& ha, const Hypergraph& h1ref,
                                                 const NodeSet& root_edge);

struct GhwResult {
    Hypergraph tp;
    HypertreeDecomposition hd;
    int width = 0;
};

struct TwResult {
    Hypergraph tp;
    TreeDecomposition td;
    int width = 0;
};

// ghw(h) <= k via a tree projection of (h, h^k); the returned decomposition
// is re-verified with lambda covers recovered by bounded set-cover search.
std::optional<GhwResult> ghw_decide(const Hypergraph& h, int k);

// tw(h) <= k via a tree projection of (h, h^tk).
std::optional<TwResult> tw_decide(const Hypergraph& h, int k, long max_cluster_edges = 200000);

struct BruteTpOptions {
    int max_nodes = 8;
};

// Ground-truth oracle: enumerates elimination orders of the nodes of h1 and
// keeps the orders whose bags all fit inside an edge of h2; the bag sets of
// feasible orders include every minimal tree projection. Returns a
// subset-minimal projection.
std::optional<Hypergraph> brute_force_tp(const TPInstance& inst, const BruteTpOptions& = {});

// All subset-minimal tree projections (deduplicated), for exhaustive checks.
std::vector<Hypergraph> brute_force_minimal_tps(const TPInstance& inst,
                                                const BruteTpOptions& = {});

// Fast existence-only check by dynamic programming over node subsets.
bool tp_exists_oracle(const TPInstance& inst, int max_nodes = 16);

}  // namespace tpj

#endif
