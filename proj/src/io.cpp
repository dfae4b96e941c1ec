#include "tpj/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

using nlohmann::json;

namespace tpj {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

ParsedHypergraph parse_hypergraph_text(const std::string& text) {
    ParsedHypergraph out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::set<std::set<std::string>> seen;
    std::set<std::string> names;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        ParsedEdge edge;
        if (auto open = line.find('('); open != std::string::npos) {
            if (line.back() != ')') throw ParseError(lineno, "expected ')' at end of line");
            edge.name = trim(line.substr(0, open));
            if (!valid_name(edge.name)) throw ParseError(lineno, "bad edge name '" + edge.name + "'");
            std::string inner = line.substr(open + 1, line.size() - open - 2);
            if (trim(inner).empty()) throw ParseError(lineno, "empty hyperedge");
            for (auto& tok : split(inner, ',')) {
                std::string t = trim(tok);
                if (!valid_name(t)) throw ParseError(lineno, "bad node name '" + t + "'");
                edge.nodes.push_back(t);
            }
        } else {
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) {
                if (!valid_name(tok)) throw ParseError(lineno, "bad node name '" + tok + "'");
                edge.nodes.push_back(tok);
            }
            if (edge.nodes.empty()) throw ParseError(lineno, "empty hyperedge");
            edge.name = "e" + std::to_string(out.edges.size());
        }
        if (!names.insert(edge.name).second)
            edge.name += "_" + std::to_string(out.edges.size());
        std::set<std::string> key(edge.nodes.begin(), edge.nodes.end());
        if (!seen.insert(key).second)
            out.warnings.push_back("line " + std::to_string(lineno) + ": duplicate hyperedge " +
                                   edge.name);
        out.edges.push_back(std::move(edge));
    }
    return out;
}

ParsedHypergraph parse_hypergraph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_hypergraph_text(buf.str());
}

std::vector<std::string> parsed_node_names(const ParsedHypergraph& p) {
    std::set<std::string> names;
    for (const auto& e : p.edges) names.insert(e.nodes.begin(), e.nodes.end());
    return {names.begin(), names.end()};
}

Hypergraph hypergraph_from_parsed(const ParsedHypergraph& p, const UniversePtr& uni) {
    NodeSet nodes(uni->size());
    std::vector<Hyperedge> edges;
    for (const auto& pe : p.edges) {
        NodeSet m(uni->size());
        for (const auto& n : pe.nodes) {
            int i = uni->index(n);
            if (i == -1) throw std::runtime_error("unknown node '" + n + "'");
            m.set(i);
            nodes.set(i);
        }
        edges.push_back(Hyperedge{pe.name, m});
    }
    return Hypergraph(uni, nodes, std::move(edges));
}

std::string print_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    for (const auto& e : h.edges()) {
        out << e.name << "(";
        bool first = true;
        for (int x = e.members.first(); x != -1; x = e.members.next(x)) {
            if (!first) out << ",";
            out << h.universe()->name(x);
            first = false;
        }
        out << ")\n";
    }
    return out.str();
}

// -- JSON ---------------------------------------------------------------------

namespace {

json names_json(const Hypergraph& h, const NodeSet& s) {
    json a = json::array();
    for (const auto& n : h.node_names(s)) a.push_back(n);
    return a;
}

json names_json(const UniversePtr& uni, const NodeSet& s) {
    json a = json::array();
    for (int x = s.first(); x != -1; x = s.next(x)) a.push_back(uni->name(x));
    return a;
}

NodeSet names_to_set(const json& a, const UniversePtr& uni) {
    NodeSet s(uni->size());
    for (const auto& n : a) {
        int i = uni->index(n.get<std::string>());
        if (i == -1) throw std::runtime_error("unknown node '" + n.get<std::string>() + "'");
        s.set(i);
    }
    return s;
}

}  // namespace

std::string hypergraph_to_json(const Hypergraph& h) {
    json j;
    j["nodes"] = names_json(h, h.nodes());
    j["edges"] = json::array();
    for (const auto& e : h.edges())
        j["edges"].push_back({{"name", e.name}, {"nodes", names_json(h, e.members)}});
    return j.dump(2);
}

std::string join_tree_to_json(const JoinTree& jt) {
    json verts = json::array();
    for (int i = 0; i < jt.owner.edge_count(); ++i) {
        verts.push_back({{"chi", names_json(jt.owner, jt.owner.edge(i).members)},
                         {"lambda", json::array({jt.owner.edge(i).name})},
                         {"parent", jt.parent[static_cast<size_t>(i)]}});
    }
    return json{{"vertices", verts}}.dump(2);
}

std::string tree_decomposition_to_json(const Hypergraph& g, const TreeDecomposition& td) {
    json verts = json::array();
    for (size_t i = 0; i < td.chi.size(); ++i)
        verts.push_back({{"chi", names_json(g.universe(), td.chi[i])}, {"parent", td.parent[i]}});
    return json{{"vertices", verts}}.dump(2);
}

std::string hypertree_decomposition_to_json(const Hypergraph& h,
                                            const HypertreeDecomposition& hd) {
    json verts = json::array();
    for (size_t i = 0; i < hd.chi.size(); ++i) {
        json lam = json::array();
        for (int e : hd.lambda[i]) lam.push_back(h.edge(e).name);
        verts.push_back({{"chi", names_json(h.universe(), hd.chi[i])},
                         {"lambda", lam},
                         {"parent", hd.parent[i]}});
    }
    return json{{"vertices", verts}}.dump(2);
}

std::string game_tree_to_json(const GameTree& t, const Hypergraph& h1, const Hypergraph& h2) {
    json verts = json::array();
    json edges = json::array();
    for (size_t i = 0; i < t.verts.size(); ++i) {
        const auto& v = t.verts[i];
        json jv = {{"id", static_cast<int>(i)},
                   {"cops", names_json(h1, v.cops)},
                   {"component", names_json(h1, v.component)},
                   {"parent", v.parent}};
        jv["squad"] = v.squad == -1 ? json(nullptr) : json(h2.edge(v.squad).name);
        verts.push_back(jv);
        for (int c : v.children) edges.push_back(json::array({static_cast<int>(i), c}));
    }
    return json{{"vertices", verts}, {"edges", edges}}.dump(2);
}

std::string tp_report_to_json(const TPReport& rep) {
    json w = json::object();
    for (const auto& wit : rep.normal_form_witnesses) {
        if (wit.tree)
            w[wit.root] = json::parse(join_tree_to_json(*wit.tree));
        else
            w[wit.root] = {{"error", wit.error}};
    }
    json j = {{"valid", rep.valid},
              {"reduced", rep.reduced},
              {"nodes_preserved", rep.nodes_preserved},
              {"components_preserved", rep.components_preserved},
              {"h1_connected_all_roots", rep.h1_connected_all_roots},
              {"normal_form_witnesses", w},
              {"note",
               "these conditions are necessary for minimality; all-true does not certify it"}};
    return j.dump(2);
}

namespace {

struct RawVerts {
    std::vector<json> verts;
    std::vector<int> parent;
    int root = -1;
};

RawVerts parse_vertices(const json& j) {
    RawVerts out;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::runtime_error("decomposition JSON needs a 'vertices' array");
    for (const auto& v : j["vertices"]) {
        out.verts.push_back(v);
        int p = v.value("parent", -1);
        out.parent.push_back(p);
        if (p == -1) out.root = static_cast<int>(out.verts.size()) - 1;
    }
    return out;
}

}  // namespace

TreeDecomposition tree_decomposition_from_json(const std::string& text, const Hypergraph& g) {
    auto raw = parse_vertices(json::parse(text));
    TreeDecomposition td;
    td.universe = g.universe();
    td.parent = raw.parent;
    td.root = raw.root;
    for (const auto& v : raw.verts) td.chi.push_back(names_to_set(v.at("chi"), g.universe()));
    return td;
}

HypertreeDecomposition hypertree_decomposition_from_json(const std::string& text,
                                                         const Hypergraph& h) {
    auto raw = parse_vertices(json::parse(text));
    HypertreeDecomposition hd;
    hd.universe = h.universe();
    hd.parent = raw.parent;
    hd.root = raw.root;
    for (const auto& v : raw.verts) {
        hd.chi.push_back(names_to_set(v.at("chi"), h.universe()));
        std::vector<int> lam;
        if (v.contains("lambda"))
            for (const auto& name : v["lambda"]) {
                int e = h.edge_index_by_name(name.get<std::string>());
                if (e == -1)
                    throw std::runtime_error("unknown edge '" + name.get<std::string>() + "'");
                lam.push_back(e);
            }
        hd.lambda.push_back(std::move(lam));
    }
    return hd;
}

GameTree game_tree_from_json(const std::string& text, const Hypergraph& h1,
                             const Hypergraph& h2) {
    json j = json::parse(text);
    if (!j.contains("vertices")) throw std::runtime_error("game tree JSON needs 'vertices'");
    GameTree t;
    std::map<int, int> id_to_idx;
    for (const auto& v : j["vertices"]) {
        GameVertex gv;
        gv.cops = names_to_set(v.at("cops"), h1.universe());
        gv.component = names_to_set(v.at("component"), h1.universe());
        gv.parent = v.value("parent", -1);
        if (v.contains("squad") && !v["squad"].is_null()) {
            gv.squad = h2.edge_index_by_name(v["squad"].get<std::string>());
            if (gv.squad == -1)
                throw std::runtime_error("unknown squad '" + v["squad"].get<std::string>() + "'");
        }
        id_to_idx[v.at("id").get<int>()] = static_cast<int>(t.verts.size());
        t.verts.push_back(std::move(gv));
    }
    for (size_t i = 0; i < t.verts.size(); ++i) {
        int p = t.verts[i].parent;
        if (p != -1) {
            auto it = id_to_idx.find(p);
            if (it == id_to_idx.end()) throw std::runtime_error("unknown parent id");
            t.verts[i].parent = it->second;
            t.verts[static_cast<size_t>(it->second)].children.push_back(static_cast<int>(i));
        } else {
            t.root = static_cast<int>(i);
        }
    }
    return t;
}

// -- DOT ------------------------------------------------------------------------

namespace {

std::string set_label(const UniversePtr& uni, const NodeSet& s) {
    std::string out = "{";
    bool first = true;
    for (int x = s.first(); x != -1; x = s.next(x)) {
        if (!first) out += ",";
        out += uni->name(x);
        first = false;
    }
    return out + "}";
}

}  // namespace

std::string join_tree_to_dot(const JoinTree& jt) {
    std::ostringstream out;
    out << "graph jointree {\n  node [shape=box];\n";
    for (int i = 0; i < jt.owner.edge_count(); ++i)
        out << "  v" << i << " [label=\"" << set_label(jt.owner.universe(), jt.owner.edge(i).members)
            << "\"];\n";
    for (int i = 0; i < jt.owner.edge_count(); ++i)
        if (jt.parent[static_cast<size_t>(i)] != -1)
            out << "  v" << jt.parent[static_cast<size_t>(i)] << " -- v" << i << ";\n";
    out << "}\n";
    return out.str();
}

std::string game_tree_to_dot(const GameTree& t, const Hypergraph& h1) {
    std::ostringstream out;
    out << "digraph gametree {\n  node [shape=record];\n";
    for (size_t i = 0; i < t.verts.size(); ++i) {
        const auto& v = t.verts[i];
        out << "  v" << i << " [label=\"M=" << set_label(h1.universe(), v.cops)
            << " | C=" << set_label(h1.universe(), v.component) << "\"];\n";
    }
    for (size_t i = 0; i < t.verts.size(); ++i)
        for (int c : t.verts[i].children) out << "  v" << i << " -> v" << c << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace tpj
