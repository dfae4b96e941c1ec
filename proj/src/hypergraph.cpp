#include "tpj/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tpj {

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    auto u = std::make_shared<Universe>();
    u->names_ = std::move(names);
    return u;
}

std::shared_ptr<const Universe> Universe::merge(const Universe& a, const Universe& b) {
    std::vector<std::string> names = a.names_;
    names.insert(names.end(), b.names_.begin(), b.names_.end());
    return make(std::move(names));
}

int Universe::index(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return -1;
    return static_cast<int>(it - names_.begin());
}

Hypergraph::Hypergraph(UniversePtr uni, NodeSet nodes, std::vector<Hyperedge> edges)
    : uni_(std::move(uni)), nodes_(std::move(nodes)) {
    if (!uni_) throw std::invalid_argument("hypergraph: null universe");
    if (nodes_.capacity() != uni_->size())
        throw std::invalid_argument("hypergraph: node set capacity does not match universe");
    covered_ = NodeSet(uni_->size());
    std::map<NodeSet, std::string> dedup;
    for (auto& e : edges) {
        if (e.members.empty()) throw std::invalid_argument("hypergraph: empty hyperedge");
        if (!e.members.is_subset_of(nodes_))
            throw std::invalid_argument("hypergraph: hyperedge not within node set");
        dedup.emplace(e.members, e.name);  // first name wins on duplicates
    }
    edges_.reserve(dedup.size());
    for (auto& [members, name] : dedup) {
        covered_ |= members;
        edges_.push_back(Hyperedge{name, members});
    }
}

int Hypergraph::edge_index(const NodeSet& members) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), members,
                               [](const Hyperedge& e, const NodeSet& m) { return e.members < m; });
    if (it == edges_.end() || it->members != members) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Hypergraph::edge_index_by_name(const std::string& name) const {
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool Hypergraph::same_universe(const Hypergraph& o) const {
    return uni_ == o.uni_ || (uni_ && o.uni_ && *uni_ == *o.uni_);
}

bool Hypergraph::same_edges(const Hypergraph& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].members != o.edges_[i].members) return false;
    return true;
}

std::vector<std::string> Hypergraph::node_names(const NodeSet& s) const {
    std::vector<std::string> out;
    for (int i = s.first(); i != -1; i = s.next(i)) out.push_back(uni_->name(i));
    return out;
}

namespace {

void require_same_universe(const Hypergraph& a, const Hypergraph& b, const char* op) {
    if (!a.same_universe(b))
        throw std::invalid_argument(std::string(op) + ": hypergraphs use different universes");
}

}  // namespace

bool leq(const Hypergraph& h1, const Hypergraph& h2) {
    require_same_universe(h1, h2, "leq");
    for (const auto& e : h1.edges()) {
        bool covered = false;
        for (const auto& f : h2.edges())
            if (e.members.is_subset_of(f.members)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool contained_in(const Hypergraph& h, const Hypergraph& h2) {
    require_same_universe(h, h2, "contained_in");
    for (const auto& e : h.edges()) {
        if (h2.edge_index(e.members) != -1) continue;
        bool covered = false;
        for (const auto& f : h2.edges()) {
            if (h.edge_index(f.members) != -1) continue;
            if (e.members.is_proper_subset_of(f.members)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool properly_contained_in(const Hypergraph& h, const Hypergraph& h2) {
    return contained_in(h, h2) && !h.same_edges(h2);
}

bool is_reduced(const Hypergraph& h) {
    const auto& es = h.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j)
            if (i != j && es[i].members.is_proper_subset_of(es[j].members)) return false;
    return true;
}

Hypergraph reduce(const Hypergraph& h) {
    std::vector<Hyperedge> kept;
    const auto& es = h.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        bool subsumed = false;
        for (size_t j = 0; j < es.size(); ++j)
            if (i != j && es[i].members.is_proper_subset_of(es[j].members)) {
                subsumed = true;
                break;
            }
        if (!subsumed) kept.push_back(es[i]);
    }
    return Hypergraph(h.universe(), h.nodes(), std::move(kept));
}

Hypergraph gaifman(const Hypergraph& h) {
    std::vector<Hyperedge> pairs;
    std::map<NodeSet, bool> seen;
    for (const auto& e : h.edges()) {
        auto v = e.members.to_vector();
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) {
                NodeSet p(h.universe()->size());
                p.set(v[i]);
                p.set(v[j]);
                if (seen.emplace(p, true).second) pairs.push_back(Hyperedge{"", p});
            }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const Hyperedge& a, const Hyperedge& b) { return a.members < b.members; });
    for (size_t i = 0; i < pairs.size(); ++i) pairs[i].name = "p" + std::to_string(i);
    return Hypergraph(h.universe(), h.nodes(), std::move(pairs));
}

std::vector<NodeSet> v_components(const Hypergraph& h, const NodeSet& v) {
    const int n = h.universe()->size();
    NodeSet free = h.nodes() - v;
    // Residual edges define [v]-adjacency; a BFS over them collects components.
    std::vector<NodeSet> residual;
    residual.reserve(h.edges().size());
    for (const auto& e : h.edges()) residual.push_back(e.members - v);

    std::vector<NodeSet> out;
    NodeSet visited(n);
    for (int s = free.first(); s != -1; s = free.next(s)) {
        if (visited.test(s)) continue;
        NodeSet comp(n);
        comp.set(s);
        visited.set(s);
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& r : residual) {
                if (!r.test(x)) continue;
                for (int y = r.first(); y != -1; y = r.next(y)) {
                    if (!visited.test(y)) {
                        visited.set(y);
                        comp.set(y);
                        stack.push_back(y);
                    }
                }
            }
        }
        out.push_back(comp);
    }
    // BFS seeds run in ascending node order, so components are already sorted
    // by least node.
    return out;
}

NodeSet frontier(const Hypergraph& h, const NodeSet& c) {
    NodeSet fr(h.universe()->size());
    for (const auto& e : h.edges())
        if (e.members.intersects(c)) fr |= e.members;
    return fr;
}

NodeSet border(const Hypergraph& h, const NodeSet& c) { return frontier(h, c) - c; }

bool v_path_exists(const Hypergraph& h, const NodeSet& v, int x, int y) {
    if (v.test(x) || v.test(y))
        throw std::invalid_argument("v_path_exists: endpoint inside the separator");
    if (x == y) return true;
    // x's component contains y iff a [v]-path exists
    for (const auto& comp : v_components(h, v))
        if (comp.test(x)) return comp.test(y);
    return false;
}

bool touches(const Hypergraph& h, const NodeSet& v, int x, const NodeSet& w) {
    NodeSet targets = w - v;
    if (targets.empty()) return false;
    // neighbours of x in the [0]-adjacency, including x itself when covered
    NodeSet zs(h.universe()->size());
    for (const auto& e : h.edges())
        if (e.members.test(x)) zs |= e.members;
    zs -= v;
    if (zs.empty()) return false;
    if (zs.intersects(targets)) return true;
    auto comps = v_components(h, v);
    for (const auto& comp : comps)
        if (comp.intersects(zs) && comp.intersects(targets)) return true;
    return false;
}

Hypergraph power_k(const Hypergraph& h, int k) {
    if (k < 1) throw std::invalid_argument("power_k: k must be >= 1");
    const auto& es = h.edges();
    const int m = static_cast<int>(es.size());
    std::map<NodeSet, bool> seen;
    std::vector<NodeSet> frontier_sets;
    for (const auto& e : es)
        if (seen.emplace(e.members, true).second) frontier_sets.push_back(e.members);
    // grow unions breadth-first: level j holds unions of <= j edges
    for (int level = 2; level <= k; ++level) {
        std::vector<NodeSet> next;
        for (const auto& u : frontier_sets)
            for (int i = 0; i < m; ++i) {
                NodeSet w = u | es[static_cast<size_t>(i)].members;
                if (seen.emplace(w, true).second) next.push_back(w);
            }
        if (next.empty()) break;
        frontier_sets = std::move(next);
    }
    std::vector<Hyperedge> out;
    out.reserve(seen.size());
    int idx = 0;
    for (auto& [members, _] : seen) out.push_back(Hyperedge{"u" + std::to_string(idx++), members});
    return Hypergraph(h.universe(), h.nodes(), std::move(out));
}

Hypergraph clusters_tk(const Hypergraph& h, int k, long max_edges) {
    if (k < 0) throw std::invalid_argument("clusters_tk: k must be >= 0");
    auto nodes = h.nodes().to_vector();
    const int n = static_cast<int>(nodes.size());
    const int cap = std::min(k + 1, n);
    long total = 0;
    {
        // running count of sum_{i=1..cap} C(n, i), clamped against max_edges
        long binom = 1;
        for (int i = 1; i <= cap; ++i) {
            binom = binom * (n - i + 1) / i;
            total += binom;
            if (total > max_edges)
                throw std::invalid_argument("clusters_tk: instance exceeds the configured edge bound");
        }
    }
    std::vector<Hyperedge> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<int> pick;
    int idx = 0;
    auto emit = [&]() {
        NodeSet s(h.universe()->size());
        for (int i : pick) s.set(nodes[static_cast<size_t>(i)]);
        out.push_back(Hyperedge{"b" + std::to_string(idx++), s});
    };
    // enumerate subsets of size 1..cap in lexicographic order
    std::function<void(int)> rec = [&](int start) {
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            emit();
            if (static_cast<int>(pick.size()) < cap) rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return Hypergraph(h.universe(), h.nodes(), std::move(out));
}

}  // namespace tpj
