#ifndef TPJ_HYPERGRAPH_HPP
#define TPJ_HYPERGRAPH_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tpj/node_set.hpp"

namespace tpj {

// Immutable, lexicographically sorted node-name table. Node index == rank of
// the name, so index order and name order agree everywhere.
class Universe {
public:
    static std::shared_ptr<const Universe> make(std::vector<std::string> names);
    static std::shared_ptr<const Universe> merge(const Universe& a, const Universe& b);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(const std::string& name) const;  // -1 when absent
    bool operator==(const Universe& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;

struct Hyperedge {
    std::string name;
    NodeSet members;
};

// Node set plus a duplicate-free edge list over a shared universe. Edges are
// kept in canonical (member-sequence) order; subset edges are retained,
// reduce() is always an explicit step.
class Hypergraph {
public:
    Hypergraph() = default;
    // Collapses duplicate member sets (first name wins), sorts edges
    // canonically, and verifies every edge is non-empty and within `nodes`.
    Hypergraph(UniversePtr uni, NodeSet nodes, std::vector<Hyperedge> edges);

    const UniversePtr& universe() const { return uni_; }
    const NodeSet& nodes() const { return nodes_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Hyperedge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    int edge_index(const NodeSet& members) const;         // -1 when absent
    int edge_index_by_name(const std::string& name) const;  // -1 when absent

    // Union of all edges; isolated nodes are exactly nodes() - covered_nodes().
    const NodeSet& covered_nodes() const { return covered_; }

    bool same_universe(const Hypergraph& o) const;
    bool same_edges(const Hypergraph& o) const;

    std::vector<std::string> node_names(const NodeSet& s) const;

private:
    UniversePtr uni_;
    NodeSet nodes_;
    NodeSet covered_;
    std::vector<Hyperedge> edges_;
};

// -- ordering relations -------------------------------------------------

// h1 <= h2: every edge of h1 is contained in some edge of h2.
bool leq(const Hypergraph& h1, const Hypergraph& h2);

// Containment order on hypergraphs: every edge of h not shared with h2 is a
// proper subset of some edge of h2 not shared with h.
bool contained_in(const Hypergraph& h, const Hypergraph& h2);
bool properly_contained_in(const Hypergraph& h, const Hypergraph& h2);

// -- structural operations ----------------------------------------------

bool is_reduced(const Hypergraph& h);

// Drops every edge that is a proper subset of another edge. Nodes unchanged.
Hypergraph reduce(const Hypergraph& h);

// Binary co-occurrence graph on nodes(h); no singleton edges.
Hypergraph gaifman(const Hypergraph& h);

// Maximal [v]-connected subsets of nodes(h) - v, ordered by least node.
// Nodes covered by no edge form singleton components.
std::vector<NodeSet> v_components(const Hypergraph& h, const NodeSet& v);

// Union of all edges intersecting c.
NodeSet frontier(const Hypergraph& h, const NodeSet& c);

// frontier(h, c) - c.
NodeSet border(const Hypergraph& h, const NodeSet& c);

// [v]-path between x and y; x == y counts as the empty path.
// Rejects x or y inside v.
bool v_path_exists(const Hypergraph& h, const NodeSet& v, int x, int y);

// x touches[v] w: x is [0]-adjacent to some z with a [v]-path from z into w.
bool touches(const Hypergraph& h, const NodeSet& v, int x, const NodeSet& w);

// H^k: all unions of at most k edges of h. Rejects k < 1.
Hypergraph power_k(const Hypergraph& h, int k);

// H^tk: all non-empty node subsets of size <= k+1. Rejects k < 0 and
// instances whose edge count would exceed max_edges.
Hypergraph clusters_tk(const Hypergraph& h, int k, long max_edges = 200000);

}  // namespace tpj

#endif
