#include "tpj/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>

#include "tpj/io.hpp"

namespace tpj {

namespace {

std::vector<std::string> letter_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    return names;
}

Hypergraph from_masks(const UniversePtr& uni, const std::vector<uint32_t>& masks) {
    NodeSet nodes(uni->size());
    std::vector<Hyperedge> edges;
    for (size_t i = 0; i < masks.size(); ++i) {
        NodeSet m(uni->size());
        for (int b = 0; b < uni->size(); ++b)
            if (masks[i] & (1u << b)) m.set(b);
        nodes |= m;
        edges.push_back(Hyperedge{"e" + std::to_string(i), m});
    }
    return Hypergraph(uni, nodes, std::move(edges));
}

}  // namespace

std::vector<Hypergraph> exhaustive_family(int nodes, int max_edge_size) {
    auto uni = Universe::make(letter_names(nodes));
    std::vector<uint32_t> candidates;
    for (uint32_t m = 1; m < (1u << nodes); ++m)
        if (__builtin_popcount(m) <= max_edge_size) candidates.push_back(m);

    std::vector<Hypergraph> out;
    std::vector<uint32_t> chosen;
    // antichain enumeration: no chosen edge contains another
    std::function<void(size_t)> rec = [&](size_t start) {
        for (size_t i = start; i < candidates.size(); ++i) {
            bool comparable = false;
            for (uint32_t c : chosen) {
                uint32_t both = c & candidates[i];
                if (both == c || both == candidates[i]) {
                    comparable = true;
                    break;
                }
            }
            if (comparable) continue;
            chosen.push_back(candidates[i]);
            out.push_back(from_masks(uni, chosen));
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

Hypergraph random_hypergraph(Rng& rng, const UniversePtr& uni, int n, int max_edges,
                             int max_edge_size) {
    int m = 1 + static_cast<int>(rng.bounded(static_cast<uint64_t>(max_edges)));
    std::vector<uint32_t> masks;
    for (int e = 0; e < m; ++e) {
        int sz = 1 + static_cast<int>(rng.bounded(static_cast<uint64_t>(std::min(max_edge_size, n))));
        uint32_t mask = 0;
        while (__builtin_popcount(mask) < sz)
            mask |= 1u << rng.bounded(static_cast<uint64_t>(n));
        masks.push_back(mask);
    }
    return from_masks(uni, masks);
}

}  // namespace

std::vector<InstancePair> random_pairs(const CorpusParams& params) {
    Rng rng(params.seed);
    std::vector<InstancePair> out;
    while (static_cast<int>(out.size()) < params.pair_count) {
        int n = 3 + static_cast<int>(rng.bounded(static_cast<uint64_t>(params.max_nodes - 2)));
        auto uni = Universe::make(letter_names(n));
        Hypergraph h1 = random_hypergraph(rng, uni, n, params.max_edges, params.max_edge_size);

        std::vector<uint32_t> masks2;
        auto edge_mask = [&](const NodeSet& s) {
            uint32_t m = 0;
            for (int x = s.first(); x != -1; x = s.next(x)) m |= 1u << x;
            return m;
        };
        if (rng.coin()) {
            // resource hypergraph built over h1: unions of small edge groups,
            // occasionally padded, so leq(h1, h2) holds
            int groups = 1 + static_cast<int>(rng.bounded(static_cast<uint64_t>(params.max_edges)));
            for (int g = 0; g < groups; ++g) {
                uint32_t m = 0;
                int take = 1 + static_cast<int>(rng.bounded(3));
                for (int t = 0; t < take; ++t)
                    m |= edge_mask(
                        h1.edge(static_cast<int>(rng.bounded(static_cast<uint64_t>(h1.edge_count()))))
                            .members);
                if (rng.coin()) m |= 1u << rng.bounded(static_cast<uint64_t>(n));
                masks2.push_back(m);
            }
            // guarantee coverage of every h1 edge
            for (const auto& e : h1.edges()) {
                uint32_t em = edge_mask(e.members);
                bool covered = false;
                for (uint32_t m : masks2)
                    if ((em & m) == em) {
                        covered = true;
                        break;
                    }
                if (!covered) masks2.push_back(em);
            }
        } else {
            int m2 = 1 + static_cast<int>(rng.bounded(static_cast<uint64_t>(params.max_edges)));
            for (int e = 0; e < m2; ++e) {
                int sz = 1 + static_cast<int>(
                                 rng.bounded(static_cast<uint64_t>(std::min(params.max_edge_size + 1, n))));
                uint32_t mask = 0;
                while (__builtin_popcount(mask) < sz)
                    mask |= 1u << rng.bounded(static_cast<uint64_t>(n));
                masks2.push_back(mask);
            }
        }
        out.push_back(InstancePair{std::move(h1), from_masks(uni, masks2)});
    }
    return out;
}

CorpusSummary write_corpus(const CorpusParams& params, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    CorpusSummary summary;

    auto pairs = random_pairs(params);
    char buf[32];
    for (size_t i = 0; i < pairs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "pair_%04zu", i);
        std::ofstream(dir + "/" + buf + "_h1.hg") << print_hypergraph(pairs[i].h1);
        std::ofstream(dir + "/" + buf + "_h2.hg") << print_hypergraph(pairs[i].h2);
        ++summary.pair_files;
    }
    auto family = exhaustive_family(params.exhaustive_nodes, params.exhaustive_edge_size);
    for (size_t i = 0; i < family.size(); ++i) {
        std::snprintf(buf, sizeof buf, "family_%04zu", i);
        std::ofstream(dir + "/" + buf + ".hg") << print_hypergraph(family[i]);
        ++summary.family_files;
    }
    std::ofstream(dir + "/manifest.txt")
        << "seed " << params.seed << "\npairs " << summary.pair_files << "\nfamily "
        << summary.family_files << "\n";
    return summary;
}

}  // namespace tpj
