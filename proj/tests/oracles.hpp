#ifndef TPJ_TEST_ORACLES_HPP
#define TPJ_TEST_ORACLES_HPP

#include <string>
#include <utility>
#include <vector>

#include "tpj/game.hpp"
#include "tpj/hypergraph.hpp"
#include "tpj/tree_projection.hpp"

// Test-only helpers and independent oracles. Everything here recomputes its
// answer from first principles and stays off the implementation paths it is
// used to check.
namespace tpj::testing {

// Hypergraph over its own universe from node-name edge lists.
Hypergraph hg(const std::vector<std::vector<std::string>>& edges,
              const std::vector<std::string>& extra_nodes = {});

// Two hypergraphs over one shared universe.
std::pair<Hypergraph, Hypergraph> hg_pair(const std::vector<std::vector<std::string>>& e1,
                                          const std::vector<std::vector<std::string>>& e2);

NodeSet ns(const Hypergraph& h, const std::vector<std::string>& names);

Hypergraph load_fixture(const std::string& filename);
std::pair<Hypergraph, Hypergraph> load_fixture_pair(const std::string& f1, const std::string& f2);

// Acyclicity by enumerating every labeled tree over the edge set (Pruefer
// sequences) and testing the connectedness condition directly.
bool join_tree_exists_exhaustive(const Hypergraph& h);

// Escape components spelled out exactly as in the game-tree definition:
// [next]-components whose union with the current component is
// [cops & next]-connected.
std::vector<NodeSet> escape_components_def42(const Hypergraph& h1, const Configuration& cfg,
                                             const NodeSet& next);

// Exact treewidth via the subset dynamic program over elimination orders.
int treewidth_oracle(const Hypergraph& g);

// Tree projection existence for tiny instances by trying every antichain of
// candidate edges, with acyclicity from the exhaustive join-tree search.
bool tp_exists_naive(const TPInstance& inst);

}  // namespace tpj::testing

#endif
