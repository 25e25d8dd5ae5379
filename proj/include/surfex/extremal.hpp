#pragma once

#include <cstdint>
#include <vector>

#include "surfex/hypercore.hpp"
#include "surfex/surface.hpp"

namespace surfex {

struct LowerBoundReport {
    std::size_t n = 0;
    double c0 = 0.0;
    double p_used = 0.0;  // min(1, c0 / sqrt(n))
    std::size_t edges_before = 0;
    std::size_t triangulations_found = 0;
    std::size_t edges_deleted = 0;
    std::size_t edges_after = 0;
    SurfaceClass target;
    std::size_t v_max = 0;
    std::size_t rounds = 0;             // enumerate-and-delete passes
    std::size_t remaining = 0;          // re-enumerated on the output; 0 expected
    bool face_identity_holds = true;    // f = 2v - 4 + 2g on every enumerated copy
};

struct LowerBoundResult {
    Hypergraph3 graph;
    LowerBoundReport report;
};

// Random 3-graph with edge probability min(1, c0 / sqrt(n)), then one edge
// (the smallest) deleted from each copy of the target with at most v_max
// vertices, repeated until no copy is left.
LowerBoundResult lower_bound_generate(std::size_t n, const SurfaceClass& target, double c0, std::size_t v_max,
                                      std::uint64_t seed, unsigned threads = 1);

// Members of the glued family: T and T' identified along one edge each, over
// every member pair, edge pair and matching of the two edges. Isomorphic
// results are kept once.
std::vector<Hypergraph3> glue_families(const std::vector<Hypergraph3>& a, const std::vector<Hypergraph3>& b);

// Largest edge count of an n-vertex 3-graph containing no member of the
// family as a (not necessarily induced) sub-hypergraph. CapExceeded for n > 9.
std::size_t extremal_number(std::size_t n, const std::vector<Hypergraph3>& family);

struct GluingRow {
    std::size_t n = 0;
    std::size_t ex_a = 0, ex_b = 0, ex_glued = 0;
    std::size_t bound = 0;  // 16 (ex_a + ex_b)
    bool holds = false;
};

struct GluingTable {
    std::vector<GluingRow> rows;  // n = 3 .. n_max
    std::size_t glued_members = 0;
    bool all_hold = true;
};

GluingTable gluing_bound_check(std::size_t n_max, const std::vector<Hypergraph3>& family_a,
                               const std::vector<Hypergraph3>& family_b);

}  // namespace surfex
