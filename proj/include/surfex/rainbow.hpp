#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "surfex/cycles.hpp"
#include "surfex/hypercore.hpp"

namespace surfex {

// Each vertex carries a sorted set of exactly r color ids.
struct SetColoring {
    int r = 0;
    std::vector<std::vector<std::uint32_t>> colors;

    // Throws ColoringIncomplete unless every vertex of a graph on n vertices
    // has exactly r distinct colors.
    void validate(std::size_t n) const;
    bool disjoint(Vertex a, Vertex b) const;
};

struct PartitionResult {
    PartiteWitness parts;
    Hypergraph3 sub;  // the transversal edges
    std::size_t best_try = 0;
};

// Uniform random 3-coloring of the vertices, keeping the transversal edges;
// best of `tries` keyed draws.
PartitionResult three_partition(const Hypergraph3& h, std::uint64_t seed, std::size_t tries = 64);

// Vertices of `graph` are edges of a 3-partite H; arrows record e -> f.
struct LinkOfEdgesGraph {
    SimpleGraph graph;
    std::vector<Edge3> payload;
    std::vector<std::uint8_t> direction;  // per graph edge (u < v): bit 0 u -> v, bit 1 v -> u

    bool arrow(Vertex from, Vertex to) const;  // payload[from] -> payload[to]
    SetColoring natural_coloring() const;
};

// Vertex of e lying in the given part.
Vertex part_vertex(const Edge3& e, const PartiteWitness& parts, int part);

// e -> f iff e, f are disjoint and x1 y2 y3, x1 x2 y3 are both edges.
bool edge_arrow(const Hypergraph3& h, const PartiteWitness& parts, const Edge3& e, const Edge3& f);

LinkOfEdgesGraph build_link_of_edges(const Hypergraph3& h, const PartiteWitness& parts);

struct DiverseCheck {
    bool diverse = true;
    std::optional<VertexPair> violation;  // two vertices within distance 2 sharing a color
};

DiverseCheck is_diverse(const SimpleGraph& g, const SetColoring& c);

// Closed walks of length len (even, >= 2). Throws Overflow past 2^64 - 1.
std::uint64_t hom_cycle(const SimpleGraph& g, std::size_t len, unsigned threads = 1);

// Walks of length len from y to z.
std::uint64_t hom_path_endpoints(const SimpleGraph& g, Vertex y, Vertex z, std::size_t len);

struct SidorenkoCheck {
    bool holds = true;
    bool exact = true;  // false when the comparison fell back to logarithms
    std::uint64_t hom = 0;
    double lower = 0.0;  // (2|E|)^{2k} / n^{2k}
    double ratio = 0.0;  // hom / lower, 0 when lower is 0
};

SidorenkoCheck sidorenko_check(const SimpleGraph& g, std::size_t k);

struct NonrainbowCount {
    std::uint64_t count = 0;  // closed walks of length len that are not rainbow
    std::uint64_t total = 0;  // hom(C_len)
    double bound = 0.0;       // 16 l sqrt(r l Delta hom(C_{2l-2}) hom(C_{2l}))
    bool holds = true;
};

// The coloring must be diverse and len = 2l with l >= 2. Throws TooLarge when
// hom(C_len) exceeds `cap`.
NonrainbowCount count_nonrainbow_homs(const SimpleGraph& g, const SetColoring& c, std::size_t len,
                                      std::uint64_t cap = 10'000'000);

// A shortest simple cycle of length 3..max_len whose color sets are pairwise
// disjoint, starting at its smallest vertex.
std::optional<std::vector<Vertex>> find_rainbow_cycle(const SimpleGraph& g, const SetColoring& c,
                                                      std::size_t max_len);

struct BalancedResult {
    Hypergraph3 sub;
    std::array<double, 3> threshold{};       // deletion thresholds of the procedure
    std::array<std::size_t, 3> t{};          // min co-degree per side in sub
    std::array<std::size_t, 3> max_degree{}; // max co-degree per side in sub
    std::size_t log_n = 0;                   // floor(log2 n) + 1
    int h = 6;
    double c1 = 0.0;
    double c2 = 0.0;
    double retained_fraction = 0.0;
    bool window_holds = true;     // max_degree < c1 t (log n)^h on every side
    bool retention_holds = true;  // |sub| >= c2 |E| (log n)^{-h}
};

// Co-degree balancing by dyadic buckets, recursion on links and threshold
// deletion. Side i collects the pairs missing part i. Throws NotThreePartite
// or EmptyResult.
BalancedResult balanced_subhypergraph(const Hypergraph3& h, const PartiteWitness& parts);

// Greedy maximal set of L-edges with no two sharing an endpoint whose other
// endpoints intersect; the natural coloring is diverse on the result.
LinkOfEdgesGraph diverse_subgraph(const LinkOfEdgesGraph& l);

struct RainbowConversion {
    std::vector<Edge3> sequence;  // f_1, f_1', f_1'', f_2, ... before removals
    std::size_t removed = 0;
    Hypergraph3 cycle;
    TopCycleCert cert;
};

// `cycle` lists L-vertices f_1..f_m (m >= 3) forming a rainbow cycle in l.
RainbowConversion rainbow_to_topcycle(const Hypergraph3& h, const PartiteWitness& parts,
                                      const LinkOfEdgesGraph& l, const std::vector<Vertex>& cycle);

}  // namespace surfex
