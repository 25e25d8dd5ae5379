#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "surfex/admissible.hpp"
#include "surfex/cycles.hpp"
#include "surfex/hypercore.hpp"
#include "surfex/surface.hpp"

namespace surfex {

struct DoublePyramid {
    Vertex x = 0, x2 = 0;
    std::vector<Vertex> cycle;  // rim, in cyclic order
    Hypergraph3 sphere;
};

// Apex pairs in descending order of colink size (ties: smaller pair); the
// first whose colink has a cycle, with a shortest such cycle.
std::optional<DoublePyramid> bes_double_pyramid(const Hypergraph3& h);

// Double pyramid containing the neighboring edges e and f whose other rim
// vertices all lie in `allowed` (outside e and f).
std::optional<Hypergraph3> find_sphere_through(const Hypergraph3& h, const Edge3& e, const Edge3& f,
                                               const std::vector<char>& allowed);

// Optional hooks for the cycle search: `step` vets each consecutive pair,
// `accept` each finished cycle.
struct CycleFilters {
    std::function<bool(const Edge3&, const Edge3&)> step;
    std::function<bool(const TopCycleCert&)> accept;
};

// Torus-like topological cycles of length <= max_len, shortest first, up to
// `limit` of them. Tries the rainbow route on a 3-partite part first, then a
// bounded search over neighboring edge sequences.
struct CycleCandidates {
    std::vector<TopCycleCert> cycles;
    std::size_t from_rainbow = 0;
    bool exhausted = false;  // the direct search hit its node budget
};

CycleCandidates find_torus_like_cycles(const Hypergraph3& h, std::size_t max_len, std::uint64_t seed,
                                       std::size_t limit, std::size_t node_budget = 2'000'000,
                                       const CycleFilters& filters = {});

struct TorusOptions {
    AdmissParams params{1.0 / 12, 1.0 / 13, 12, 12};
    ProbMode mode{ProbMethod::Auto, 2000, 0, 16, 1};
    std::size_t max_cycle_len = 6;
    std::uint64_t seed = 0;
    std::size_t retries = 64;
    std::size_t max_candidates = 8;
    bool skip_F = false;
    unsigned threads = 1;
};

enum class TorusStage { None, SelectF, Cycle, Witness, Spheres, Glue, Verify };

std::string stage_name(TorusStage stage);

struct TorusResult {
    bool ok = false;
    TorusStage stage = TorusStage::None;  // the stage that failed last
    std::string diagnostics;
    std::optional<Hypergraph3> surface;
    std::optional<TopCycleCert> cycle;
    std::vector<Edge3> witnesses;
    std::size_t f_size = 0;
    std::size_t candidates_tried = 0;
    std::size_t retries_used = 0;
};

TorusResult build_torus(const Hypergraph3& h, const TorusOptions& options);

struct GenusOptions {
    TorusOptions torus;         // used as is when g = 1
    double p = 0.5;
    double eps = 0.5;
    std::size_t v_max = 0;      // per piece; 0 picks max(7, 4(g-1)+3)
    std::size_t retries = 2048; // two-colorings per candidate edge
    std::size_t max_edges = 0;  // candidate shared edges examined; 0: all
    std::uint64_t seed = 0;
};

struct GenusResult {
    bool ok = false;
    std::string stage;  // "rich", "coloring" or "verify" on failure
    std::string diagnostics;
    std::optional<Hypergraph3> surface;
    std::optional<Edge3> shared_edge;
    bool from_coloring = false;  // false: found by the deterministic pairing
    std::size_t colorings_used = 0;
};

GenusResult find_surface_genus_g(const Hypergraph3& h, int g, const GenusOptions& options);

}  // namespace surfex
