#ifndef TPJ_DECOMPOSITION_HPP
#define TPJ_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "tpj/hypergraph.hpp"
#include "tpj/join_tree.hpp"

namespace tpj {

struct TreeDecomposition {
    UniversePtr universe;
    std::vector<NodeSet> chi;
    std::vector<int> parent;  // -1 for the root
    int root = -1;

    int width() const;  // max |chi| - 1
};

struct HypertreeDecomposition {
    UniversePtr universe;
    std::vector<NodeSet> chi;
    std::vector<std::vector<int>> lambda;  // indices into the hypergraph's edges
    std::vector<int> parent;
    int root = -1;

    int width() const;  // max |lambda|
};

// Width on success; on failure the violated condition number (1-3, or 0 for a
// malformed tree) plus a witness.
struct DecompositionVerdict {
    std::optional<int> width;
    int condition = 0;
    std::string detail;

    bool ok() const { return width.has_value(); }
};

// Conditions (1)-(3) of tree decompositions, checked against gaifman(g).
DecompositionVerdict verify_tree_decomposition(const Hypergraph& g, const TreeDecomposition& td);

// Conditions (1)-(3) of generalized hypertree decompositions; condition (4)
// is checked additionally when generalized is false.
DecompositionVerdict verify_hypertree_decomposition(const Hypergraph& h,
                                                    const HypertreeDecomposition& hd,
                                                    bool generalized);

// Connectedness in the sense of SH07: |lambda(root)| = 1 and every edge of
// lambda(s) meets chi(s) & chi(parent(s)). Expects a decomposition that
// already passed verify_hypertree_decomposition.
CheckResult is_sh07_connected(const Hypergraph& h, const HypertreeDecomposition& hd);

// Width-1 decomposition mirroring a join tree: chi(p) = lambda-edge = vertex.
HypertreeDecomposition decomposition_from_join_tree(const JoinTree& jt);

}  // namespace tpj

#endif
