#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "surfex/hypercore.hpp"
#include "surfex/surface.hpp"

namespace surfex {

struct SurfaceSearch {
    SurfaceClass target = SurfaceClass::orientable(0);
    std::size_t v_max = 10;
    std::vector<char> allowed;     // empty: every vertex allowed
    std::size_t max_results = 0;   // 0: no limit
    std::size_t node_budget = 0;   // 0: no limit
};

struct SurfaceSearchResult {
    std::vector<Hypergraph3> surfaces;
    std::size_t nodes = 0;
    bool exhausted = false;  // stopped on the node budget
};

// Closed surfaces S of H with S containing edge `seed`, at most v_max vertices
// (all allowed) and classifying as the target. With `minimal_seed`, faces
// below the seed index are excluded, so each surface is produced only from
// its smallest face.
SurfaceSearchResult surfaces_through(const Hypergraph3& h, std::size_t seed, const SurfaceSearch& search,
                                     bool minimal_seed = false);

std::optional<Hypergraph3> find_surface_through(const Hypergraph3& h, const Edge3& e, const SurfaceSearch& search);

// Every sub-complex of H that is a closed surface of the target class with at
// most v_max vertices. Throws CapExceeded when v_max > cap.
std::vector<Hypergraph3> count_sub_triangulations(const Hypergraph3& h, const SurfaceClass& target,
                                                  std::size_t v_max, std::size_t cap = 10, unsigned threads = 1);

}  // namespace surfex
