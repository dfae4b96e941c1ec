#ifndef TPJ_CORPUS_HPP
#define TPJ_CORPUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tpj/hypergraph.hpp"

namespace tpj {

// Deterministic bounded draws; mt19937_64 output is pinned by the standard
// and the rejection step avoids implementation-defined distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t bounded(uint64_t n) {
        uint64_t lim = ~uint64_t{0} - ~uint64_t{0} % n;
        uint64_t r;
        do {
            r = gen_();
        } while (r >= lim);
        return r % n;
    }
    bool coin() { return bounded(2) == 1; }

private:
    std::mt19937_64 gen_;
};

struct CorpusParams {
    uint64_t seed = 1;
    int max_nodes = 8;
    int max_edges = 6;
    int max_edge_size = 4;
    int pair_count = 100;
    int exhaustive_nodes = 4;
    int exhaustive_edge_size = 3;
};

struct InstancePair {
    Hypergraph h1;
    Hypergraph h2;
};

// All reduced hypergraphs (antichain edge sets) over a fixed universe of
// `nodes` names, edges of size <= max_edge_size, nodes = covered nodes.
std::vector<Hypergraph> exhaustive_family(int nodes, int max_edge_size);

// Seeded pseudo-random pairs within the given bounds; every hypergraph has
// nodes = covered nodes. Roughly half the pairs are built to satisfy
// leq(h1, h2).
std::vector<InstancePair> random_pairs(const CorpusParams& params);

struct CorpusSummary {
    int pair_files = 0;
    int family_files = 0;
};

// Writes pair_NNNN_{h1,h2}.hg and family_NNNN.hg plus a manifest under dir.
CorpusSummary write_corpus(const CorpusParams& params, const std::string& dir);

}  // namespace tpj

#endif
