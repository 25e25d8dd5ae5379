#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfex/hypercore.hpp"

namespace surfex {

enum class CycleKind { Cylinder, Moebius };

std::string kind_name(CycleKind kind);

struct TopCycleCert {
    std::vector<Edge3> ordering;        // e_1..e_r, consecutive edges neighboring
    std::vector<VertexPair> boundary;   // s_i, the boundary side of e_i
    std::vector<int> epsilons;          // +1 iff s_i and s_{i+1} meet
    CycleKind kind = CycleKind::Cylinder;
    bool torus_like = false;

    std::size_t r() const { return ordering.size(); }
};

// Which recognition condition failed first.
enum class TopCycleDefect {
    None,
    SizeMismatch,   // edges != non-isolated vertices, or fewer than 3
    NotACycle,      // the neighboring relation is not a single r-cycle
    LinkNotPath,
    EulerNonzero,
    BadBoundary,
};

std::string defect_name(TopCycleDefect d);

struct TopCycleResult {
    std::optional<TopCycleCert> cert;
    TopCycleDefect defect = TopCycleDefect::None;
    std::string reason;
};

TopCycleResult recognize_topological_cycle(const Hypergraph3& h);

// Same, but throws NotATopCycle on failure.
TopCycleCert require_topological_cycle(const Hypergraph3& h);

bool is_torus_like(const TopCycleCert& cert);

// Edges {i-1, i, i+1} mod r on vertices 0..r-1. r = 4 is the tetrahedron
// boundary rather than a strip, so it is rejected unless forced.
Hypergraph3 tight_cycle(std::size_t r, bool allow_degenerate = false);

// Rim y_i = i for i < s, apexes s and s + 1.
Hypergraph3 double_pyramid(std::size_t s);

struct PyramidCycle {
    Hypergraph3 cycle;
    TopCycleCert cert;
};

// In double_pyramid(s) with e_i = x y_i y_{i+1} and f_i = x' y_i y_{i+1}, the
// sequence e_1..e_r, f_r..f_s, f_1.
PyramidCycle pyramid_topcycle(std::size_t s, std::size_t r);

// Vertex -> part (0, 1, 2); vertices outside every part map to kNoPart.
struct PartiteWitness {
    static constexpr std::uint8_t kNoPart = 0xFF;
    std::vector<std::uint8_t> part;

    bool transversal(const Edge3& e) const;
};

bool is_three_partite(const Hypergraph3& h, const PartiteWitness& parts);

// Throws NotThreePartite / NotATopCycle when the preconditions fail.
bool check_3partite_torus_like(const Hypergraph3& h, const PartiteWitness& parts);

struct GlueSpec {
    TopCycleCert cycle;
    std::vector<Hypergraph3> spheres;  // spheres[i] carries e_i and e_{i+1}
};

Hypergraph3 glue_spheres(const GlueSpec& spec);

// Double pyramid with apexes x = e \ f and x' = f \ e over the cycle
// y, z, path..., where {y, z} = e & f. `path` must be non-empty.
Hypergraph3 pair_sphere(const Edge3& e, const Edge3& f, const std::vector<Vertex>& path,
                        std::size_t n_vertices);

Hypergraph3 union_of(const std::vector<Hypergraph3>& parts);

}  // namespace surfex
