#ifndef TPJ_IO_HPP
#define TPJ_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpj/decomposition.hpp"
#include "tpj/game.hpp"
#include "tpj/hypergraph.hpp"
#include "tpj/join_tree.hpp"
#include "tpj/tree_projection.hpp"

namespace tpj {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// One hyperedge per line: `name(A,B,C)` or bare `A B C`; `#` starts a comment.
struct ParsedEdge {
    std::string name;
    std::vector<std::string> nodes;
};

struct ParsedHypergraph {
    std::vector<ParsedEdge> edges;
    std::vector<std::string> warnings;  // duplicate edges are kept but flagged
};

ParsedHypergraph parse_hypergraph_text(const std::string& text);
ParsedHypergraph parse_hypergraph_file(const std::string& path);

// Node names used in the parsed edges, for universe construction.
std::vector<std::string> parsed_node_names(const ParsedHypergraph& p);

// Instantiates over `uni`; every node name must be known there.
Hypergraph hypergraph_from_parsed(const ParsedHypergraph& p, const UniversePtr& uni);

std::string print_hypergraph(const Hypergraph& h);

// -- JSON -------------------------------------------------------------------

std::string hypergraph_to_json(const Hypergraph& h);
std::string join_tree_to_json(const JoinTree& jt);
std::string tree_decomposition_to_json(const Hypergraph& g, const TreeDecomposition& td);
std::string hypertree_decomposition_to_json(const Hypergraph& h, const HypertreeDecomposition& hd);
std::string game_tree_to_json(const GameTree& t, const Hypergraph& h1, const Hypergraph& h2);
std::string tp_report_to_json(const TPReport& rep);

TreeDecomposition tree_decomposition_from_json(const std::string& text, const Hypergraph& g);
HypertreeDecomposition hypertree_decomposition_from_json(const std::string& text,
                                                         const Hypergraph& h);
GameTree game_tree_from_json(const std::string& text, const Hypergraph& h1, const Hypergraph& h2);

// -- DOT --------------------------------------------------------------------

std::string join_tree_to_dot(const JoinTree& jt);
std::string game_tree_to_dot(const GameTree& t, const Hypergraph& h1);

}  // namespace tpj

#endif
