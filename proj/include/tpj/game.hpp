#ifndef TPJ_GAME_HPP
#define TPJ_GAME_HPP

#include <map>
#include <optional>
#include <vector>

#include "tpj/hypergraph.hpp"
#include "tpj/join_tree.hpp"

namespace tpj {

// Cop placement backed by a witnessing squad of h2 (cops within the squad).
struct Position {
    NodeSet cops;
    int squad = -1;  // edge index into h2; -1 only for the empty root position
};

// Game state (M, C): cop set plus the Robber's component. The root carries the
// empty position with component = nodes(h1); capture states have an empty
// component.
struct Configuration {
    Position position;
    NodeSet component;

    bool is_capture() const { return component.empty(); }
    bool is_initial() const { return position.cops.empty(); }
};

struct GameVertex {
    NodeSet cops;
    int squad = -1;
    NodeSet component;
    int parent = -1;
    std::vector<int> children;
};

// Explicit unfolding of a strategy: one child per escape component of the move
// played at a vertex, or a single capture child when there is none.
struct GameTree {
    std::vector<GameVertex> verts;
    int root = 0;

    Configuration config(int v) const {
        return Configuration{Position{verts[static_cast<size_t>(v)].cops,
                                      verts[static_cast<size_t>(v)].squad},
                             verts[static_cast<size_t>(v)].component};
    }
    // Move played at a non-leaf vertex (all children share it).
    Position move_at(int v) const {
        int c = verts[static_cast<size_t>(v)].children.front();
        return Position{verts[static_cast<size_t>(c)].cops, verts[static_cast<size_t>(c)].squad};
    }
};

// border(h1, component) minus the next cops; when the configuration carries a
// non-empty position the equivalent form M & Fr(C) - M' is cross-checked.
NodeSet escape_door(const Hypergraph& h1, const Configuration& cfg, const NodeSet& next_cops);

// All non-empty positions M' within squad & Fr(component) for some squad,
// deduplicated on the cop set. Enumeration helper for small instances.
std::vector<Position> legal_moves(const Hypergraph& h1, const Hypergraph& h2,
                                  const Configuration& cfg, int max_frontier_bits = 24);

// Components the Robber may occupy after the move: [cops']-components of h1
// meeting component | escape door.
std::vector<NodeSet> robber_components(const Hypergraph& h1, const Configuration& cfg,
                                       const NodeSet& next_cops);

// Every tree edge has an empty escape door.
bool is_monotone(const GameTree& t, const Hypergraph& h1);

// Memoized monotone solver. Candidate moves are the frontier-maximal cop sets
// squad & Fr(C) over squads covering the border of C; the search is keyed on
// the component alone. `first_move` forces the root position (cops must lie
// within some squad and the covered nodes of h1).
std::optional<GameTree> solve(const Hypergraph& h1, const Hypergraph& h2,
                              const std::optional<NodeSet>& first_move = std::nullopt);

struct BruteOptions {
    int max_nodes = 10;
    bool prefer_nonmonotone = false;
    uint64_t seed = 0;
};

// Unrestricted fixpoint search over all legal moves; a configuration that can
// never reach capture is a Robber win. Ground truth for solve.
std::optional<GameTree> brute_solve(const Hypergraph& h1, const Hypergraph& h2,
                                    const BruteOptions& opts = {});

// Rewrites the shallowest non-monotone edge r->s by dropping ED(r, M_s) from
// the move into r, until the strategy is monotone. Strategy size strictly
// decreases at every rewrite. Rejects non-winning input.
GameTree monotonize(const GameTree& t, const Hypergraph& h1, const Hypergraph& h2);

// Structural check of the unfolding: legal moves everywhere, children exactly
// the escape components, every branch ending in capture.
CheckResult verify_strategy(const GameTree& t, const Hypergraph& h1, const Hypergraph& h2);

// Sum of |cops| over all game-tree vertices.
long strategy_size(const GameTree& t);

// Unfolds a component-keyed move map into its game tree. A move missing for a
// reached component, an illegal move, or a component repeating along a path
// (the Robber survives forever) fails with a diagnostic.
std::optional<GameTree> unfold_positional(const Hypergraph& h1, const Hypergraph& h2,
                                          const std::map<NodeSet, Position>& moves,
                                          std::string* error = nullptr);

}  // namespace tpj

#endif
