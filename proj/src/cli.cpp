#include "tpj/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tpj/corpus.hpp"
#include "tpj/io.hpp"
#include "tpj/tree_projection.hpp"

namespace tpj {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct Inputs {
    UniversePtr uni;
    std::vector<Hypergraph> graphs;
};

// Parses hypergraph files over one merged universe so node sets stay
// comparable across the inputs of a command.
Inputs load_hypergraphs(const std::vector<std::string>& paths, std::ostream& err) {
    std::vector<ParsedHypergraph> parsed;
    std::vector<std::string> names;
    for (const auto& p : paths) {
        parsed.push_back(parse_hypergraph_file(p));
        for (const auto& w : parsed.back().warnings) err << p << ": warning: " << w << "\n";
        auto n = parsed_node_names(parsed.back());
        names.insert(names.end(), n.begin(), n.end());
    }
    Inputs in;
    in.uni = Universe::make(std::move(names));
    for (const auto& p : parsed) in.graphs.push_back(hypergraph_from_parsed(p, in.uni));
    return in;
}

NodeSet parse_node_list(const std::string& csv, const UniversePtr& uni) {
    NodeSet s(uni->size());
    if (csv.empty()) return s;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        int i = uni->index(tok);
        if (i == -1) throw std::runtime_error("unknown node '" + tok + "'");
        s.set(i);
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << text;
    }
}

std::string render_set(const Hypergraph& h, const NodeSet& s) {
    std::string out;
    bool first = true;
    for (const auto& n : h.node_names(s)) {
        if (!first) out += " ";
        out += n;
        first = false;
    }
    return out;
}

std::string join_tree_text(const JoinTree& jt) {
    std::ostringstream out;
    for (int i = 0; i < jt.owner.edge_count(); ++i) {
        out << jt.owner.edge(i).name;
        int p = jt.parent[static_cast<size_t>(i)];
        if (p == -1)
            out << " (root)\n";
        else
            out << " -> " << jt.owner.edge(p).name << "\n";
    }
    return out.str();
}

std::string game_tree_text(const GameTree& t, const Hypergraph& h1) {
    std::ostringstream out;
    std::function<void(int, int)> rec = [&](int v, int depth) {
        const auto& vv = t.verts[static_cast<size_t>(v)];
        for (int i = 0; i < depth; ++i) out << "  ";
        out << "(M={" << render_set(h1, vv.cops) << "}, C={" << render_set(h1, vv.component)
            << "})\n";
        for (int c : vv.children) rec(c, depth + 1);
    };
    rec(t.root, 0);
    return out.str();
}

int default_max_nodes() {
    if (const char* env = std::getenv("TPJ_MAX_NODES")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 8;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tree projections of hypergraph pairs: deciders, verifiers, and the "
                 "Robber-and-Captain game"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    std::vector<std::string> files;
    std::string separator_csv, first_move_csv, root_csv;
    std::string tree_path;
    int k = 1;
    bool generalized = false, sh07 = false, json_flag = false;
    CorpusParams corpus;
    corpus.max_nodes = default_max_nodes();
    std::string corpus_dir = "corpus";

    auto add_common = [&](CLI::App* cmd, int nfiles) {
        cmd->add_option("files", files)->expected(nfiles);
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
        cmd->add_flag("--json", json_flag, "shorthand for --format json");
        cmd->add_option("--out", out_path);
    };

    auto* c_acyclic = app.add_subcommand("acyclic", "test alpha-acyclicity");
    add_common(c_acyclic, 1);
    auto* c_components = app.add_subcommand("components", "[V]-components of a hypergraph");
    add_common(c_components, 1);
    c_components->add_option("--separator", separator_csv, "comma-separated node list");
    auto* c_jointree = app.add_subcommand("jointree", "build a join tree");
    add_common(c_jointree, 1);
    auto* c_tp_find = app.add_subcommand("tp-find", "find a tree projection of (H1,H2)");
    add_common(c_tp_find, 2);
    auto* c_tp_check = app.add_subcommand("tp-check", "verify a tree projection candidate");
    add_common(c_tp_check, 3);
    auto* c_tp_min = app.add_subcommand("tp-minimize", "containment-minimize a tree projection");
    add_common(c_tp_min, 3);
    auto* c_tp_report = app.add_subcommand("tp-report", "minimality-condition report");
    add_common(c_tp_report, 3);
    auto* c_solve = app.add_subcommand("game-solve", "solve the Robber-and-Captain game");
    add_common(c_solve, 2);
    c_solve->add_option("--first-move", first_move_csv, "force the first cop set");
    c_solve->add_option("--tree", tree_path, "write the game tree as JSON");
    auto* c_mono = app.add_subcommand("game-monotonize", "monotonize a winning strategy");
    add_common(c_mono, 3);
    auto* c_gverify = app.add_subcommand("game-verify", "verify a strategy game tree");
    add_common(c_gverify, 3);
    auto* c_ghw = app.add_subcommand("ghw", "decide generalized hypertree width <= k");
    add_common(c_ghw, 1);
    c_ghw->add_option("--k", k)->required();
    auto* c_tw = app.add_subcommand("tw", "decide treewidth <= k");
    add_common(c_tw, 1);
    c_tw->add_option("--k", k)->required();
    auto* c_vtd = app.add_subcommand("verify-td", "verify a tree decomposition");
    add_common(c_vtd, 2);
    auto* c_vhd = app.add_subcommand("verify-hd", "verify a (generalized) hypertree decomposition");
    add_common(c_vhd, 2);
    c_vhd->add_flag("--generalized", generalized, "skip the descendant condition (4)");
    c_vhd->add_flag("--sh07", sh07, "additionally check SH07 connectedness");
    auto* c_corpus = app.add_subcommand("gen-corpus", "generate test instances");
    c_corpus->add_option("--seed", corpus.seed);
    c_corpus->add_option("--out", corpus_dir);
    c_corpus->add_option("--max-nodes", corpus.max_nodes);
    c_corpus->add_option("--max-edges", corpus.max_edges);
    c_corpus->add_option("--max-edge-size", corpus.max_edge_size);
    c_corpus->add_option("--pairs", corpus.pair_count);
    c_corpus->add_option("--exhaustive-nodes", corpus.exhaustive_nodes);

    std::vector<const char*> argv;
    argv.push_back("treeproj");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitYes;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (json_flag) format = "json";

    try {
        if (app.got_subcommand(c_corpus)) {
            auto summary = write_corpus(corpus, corpus_dir);
            out << "pairs " << summary.pair_files << "\nfamily " << summary.family_files << "\n";
            return kExitYes;
        }

        if (app.got_subcommand(c_acyclic)) {
            auto in = load_hypergraphs(files, err);
            auto jt = build_join_tree(in.graphs[0]);
            out << (jt ? "acyclic\n" : "cyclic\n");
            return jt ? kExitYes : kExitNo;
        }

        if (app.got_subcommand(c_components)) {
            auto in = load_hypergraphs(files, err);
            NodeSet sep = parse_node_list(separator_csv, in.uni);
            for (const auto& c : v_components(in.graphs[0], sep))
                out << render_set(in.graphs[0], c) << "\n";
            return kExitYes;
        }

        if (app.got_subcommand(c_jointree)) {
            auto in = load_hypergraphs(files, err);
            auto jt = build_join_tree(in.graphs[0]);
            if (!jt) {
                out << "cyclic\n";
                return kExitNo;
            }
            if (format == "json")
                emit(join_tree_to_json(*jt), out_path, out);
            else if (format == "dot")
                emit(join_tree_to_dot(*jt), out_path, out);
            else
                emit(join_tree_text(*jt), out_path, out);
            return kExitYes;
        }

        if (app.got_subcommand(c_tp_find)) {
            auto in = load_hypergraphs(files, err);
            TPInstance inst(in.graphs[0], in.graphs[1]);
            if (!leq(inst.h1, inst.h2)) err << "warning: h1 is not covered by h2\n";
            auto tp = find_tp(inst);
            if (!tp) {
                out << "no tree projection\n";
                return kExitNo;
            }
            if (format == "json") {
                auto rep = check_minimality_conditions(*tp, inst);
                std::ostringstream buf;
                buf << "{\n\"tp\": " << hypergraph_to_json(*tp)
                    << ",\n\"report\": " << tp_report_to_json(rep) << "\n}";
                emit(buf.str(), out_path, out);
            } else {
                emit(print_hypergraph(*tp), out_path, out);
            }
            return kExitYes;
        }

        if (app.got_subcommand(c_tp_check)) {
            auto in = load_hypergraphs(files, err);
            TPInstance inst(in.graphs[0], in.graphs[1]);
            auto v = is_tree_projection(in.graphs[2], inst);
            if (!v) {
                out << "invalid: " << v.detail << "\n";
                return kExitVerification;
            }
            out << "valid tree projection\n";
            return kExitYes;
        }

        if (app.got_subcommand(c_tp_min)) {
            auto in = load_hypergraphs(files, err);
            TPInstance inst(in.graphs[0], in.graphs[1]);
            if (auto v = is_tree_projection(in.graphs[2], inst); !v) {
                out << "invalid: " << v.detail << "\n";
                return kExitVerification;
            }
            MinimizeOptions mo;
            Hypergraph minha = minimize(in.graphs[2], inst, mo);
            std::string note =
                inst.h1.covered_nodes().count() <= mo.exhaustive_node_bound
                    ? "# subset-minimal (certified within the exhaustive bound)\n"
                    : "# locally minimal (instance exceeds the exhaustive bound)\n";
            if (format == "json")
                emit(hypergraph_to_json(minha), out_path, out);
            else
                emit(note + print_hypergraph(minha), out_path, out);
            return kExitYes;
        }

        if (app.got_subcommand(c_tp_report)) {
            auto in = load_hypergraphs(files, err);
            TPInstance inst(in.graphs[0], in.graphs[1]);
            auto rep = check_minimality_conditions(in.graphs[2], inst);
            emit(tp_report_to_json(rep), out_path, out);
            return rep.valid ? kExitYes : kExitVerification;
        }

        if (app.got_subcommand(c_solve)) {
            auto in = load_hypergraphs(files, err);
            const Hypergraph &h1 = in.graphs[0], &h2 = in.graphs[1];
            if (!leq(h1, h2)) err << "warning: h1 is not covered by h2\n";
            std::optional<NodeSet> first;
            if (!first_move_csv.empty()) first = parse_node_list(first_move_csv, in.uni);
            auto t = solve(h1, h2, first);
            if (!t) {
                out << "no winning strategy\n";
                return kExitNo;
            }
            if (!tree_path.empty()) emit(game_tree_to_json(*t, h1, h2), tree_path, out);
            if (format == "json")
                emit(game_tree_to_json(*t, h1, h2), out_path, out);
            else if (format == "dot")
                emit(game_tree_to_dot(*t, h1), out_path, out);
            else
                emit("winning strategy (size " + std::to_string(strategy_size(*t)) + ", " +
                         (is_monotone(*t, h1) ? "monotone" : "non-monotone") + ")\n" +
                         game_tree_text(*t, h1),
                     out_path, out);
            return kExitYes;
        }

        if (app.got_subcommand(c_mono)) {
            auto in = load_hypergraphs({files[0], files[1]}, err);
            const Hypergraph &h1 = in.graphs[0], &h2 = in.graphs[1];
            GameTree t = game_tree_from_json(read_file(files[2]), h1, h2);
            if (auto v = verify_strategy(t, h1, h2); !v) {
                out << "not a winning strategy: " << v.detail << "\n";
                return kExitVerification;
            }
            GameTree m = monotonize(t, h1, h2);
            if (format == "dot")
                emit(game_tree_to_dot(m, h1), out_path, out);
            else if (format == "text")
                emit(game_tree_text(m, h1), out_path, out);
            else
                emit(game_tree_to_json(m, h1, h2), out_path, out);
            return kExitYes;
        }

        if (app.got_subcommand(c_gverify)) {
            auto in = load_hypergraphs({files[0], files[1]}, err);
            const Hypergraph &h1 = in.graphs[0], &h2 = in.graphs[1];
            GameTree t = game_tree_from_json(read_file(files[2]), h1, h2);
            auto v = verify_strategy(t, h1, h2);
            if (!v) {
                out << "invalid: " << v.detail << "\n";
                return kExitVerification;
            }
            out << "winning strategy (size " << strategy_size(t) << ", "
                << (is_monotone(t, h1) ? "monotone" : "non-monotone") << ")\n";
            return kExitYes;
        }

        if (app.got_subcommand(c_ghw)) {
            auto in = load_hypergraphs(files, err);
            auto r = ghw_decide(in.graphs[0], k);
            if (!r) {
                out << "ghw > " << k << "\n";
                return kExitNo;
            }
            out << "ghw <= " << k << " (width " << r->width << ")\n";
            emit(hypertree_decomposition_to_json(in.graphs[0], r->hd), out_path, out);
            return kExitYes;
        }

        if (app.got_subcommand(c_tw)) {
            auto in = load_hypergraphs(files, err);
            auto r = tw_decide(in.graphs[0], k);
            if (!r) {
                out << "tw > " << k << "\n";
                return kExitNo;
            }
            out << "tw <= " << k << " (width " << r->width << ")\n";
            emit(tree_decomposition_to_json(in.graphs[0], r->td), out_path, out);
            return kExitYes;
        }

        if (app.got_subcommand(c_vtd)) {
            auto in = load_hypergraphs({files[0]}, err);
            auto td = tree_decomposition_from_json(read_file(files[1]), in.graphs[0]);
            auto v = verify_tree_decomposition(in.graphs[0], td);
            if (!v.ok()) {
                out << "condition " << v.condition << " violated: " << v.detail << "\n";
                return kExitVerification;
            }
            out << "width " << *v.width << "\n";
            return kExitYes;
        }

        if (app.got_subcommand(c_vhd)) {
            auto in = load_hypergraphs({files[0]}, err);
            auto hd = hypertree_decomposition_from_json(read_file(files[1]), in.graphs[0]);
            auto v = verify_hypertree_decomposition(in.graphs[0], hd, generalized);
            if (!v.ok()) {
                out << "condition " << v.condition << " violated: " << v.detail << "\n";
                return kExitVerification;
            }
            if (sh07) {
                auto c = is_sh07_connected(in.graphs[0], hd);
                if (!c) {
                    out << "not sh07-connected: " << c.detail << "\n";
                    return kExitVerification;
                }
                out << "width " << *v.width << " (sh07-connected)\n";
                return kExitYes;
            }
            out << "width " << *v.width << "\n";
            return kExitYes;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace tpj
