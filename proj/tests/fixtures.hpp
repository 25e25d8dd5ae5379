#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "surfex/cycles.hpp"
#include "surfex/hypercore.hpp"

namespace fixtures {

using surfex::Edge3;
using surfex::Hypergraph3;
using surfex::SimpleGraph;
using surfex::Vertex;

// Faces {i, i+1, i+3} and {i, i+2, i+3} mod 7: the K7 embedding in the torus.
inline Hypergraph3 torus7() {
    std::vector<Edge3> faces;
    for (Vertex i = 0; i < 7; ++i) {
        faces.push_back(Edge3::make(i, (i + 1) % 7, (i + 3) % 7));
        faces.push_back(Edge3::make(i, (i + 2) % 7, (i + 3) % 7));
    }
    return Hypergraph3(7, faces);
}

// Antipodal quotient of the icosahedron.
inline Hypergraph3 projective_plane6() {
    const int faces[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                              {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
    std::vector<Edge3> edges;
    for (const auto& f : faces) {
        edges.push_back(Edge3::make(f[0] - 1, f[1] - 1, f[2] - 1));
    }
    return Hypergraph3(6, edges);
}

inline Hypergraph3 shifted(const Hypergraph3& h, Vertex by, std::size_t n) {
    std::vector<Edge3> edges;
    for (const Edge3& e : h.edges()) edges.push_back(Edge3::make(e[0] + by, e[1] + by, e[2] + by));
    return Hypergraph3(n, edges);
}

inline Hypergraph3 complete3(std::size_t n) {
    std::vector<Edge3> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) edges.push_back(Edge3::make(a, b, c));
    return Hypergraph3(n, edges);
}

inline SimpleGraph complete_graph(std::size_t n) {
    std::vector<surfex::VertexPair> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return SimpleGraph(n, edges);
}

inline SimpleGraph random_graph(std::size_t n, double q, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(q);
    std::vector<surfex::VertexPair> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng)) edges.emplace_back(a, b);
    return SimpleGraph(n, edges);
}

inline Hypergraph3 random_relabel(const Hypergraph3& h, std::mt19937_64& rng) {
    std::vector<Vertex> perm(h.n_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return surfex::relabel(h, perm);
}

// f_i = (i, m + i, 2m + i) for i < m, with both interpolating edges for each
// consecutive pair: forward[i] means f_i -> f_{i+1}. Vertex ids are shuffled
// when an rng is given; `noise` extra transversal edges on the same vertices.
struct RainbowInstance {
    Hypergraph3 h;
    surfex::PartiteWitness parts;
    std::vector<Edge3> f;
};

inline RainbowInstance planted_rainbow(const std::vector<bool>& forward, std::mt19937_64* rng = nullptr,
                                       std::size_t noise = 0) {
    const Vertex m = static_cast<Vertex>(forward.size());
    std::vector<Vertex> id(3 * m);
    std::iota(id.begin(), id.end(), 0);
    if (rng) std::shuffle(id.begin(), id.end(), *rng);
    auto x = [&](Vertex i, Vertex j) { return id[j * m + i % m]; };
    std::vector<Edge3> edges;
    RainbowInstance out;
    for (Vertex i = 0; i < m; ++i) {
        out.f.push_back(Edge3::make(x(i, 0), x(i, 1), x(i, 2)));
        edges.push_back(out.f.back());
        if (forward[i]) {
            edges.push_back(Edge3::make(x(i, 0), x(i, 1), x(i + 1, 2)));
            edges.push_back(Edge3::make(x(i, 0), x(i + 1, 1), x(i + 1, 2)));
        } else {
            edges.push_back(Edge3::make(x(i + 1, 0), x(i, 1), x(i, 2)));
            edges.push_back(Edge3::make(x(i + 1, 0), x(i + 1, 1), x(i, 2)));
        }
    }
    for (std::size_t k = 0; rng && k < noise; ++k) {
        edges.push_back(Edge3::make(x(static_cast<Vertex>((*rng)() % m), 0), x(static_cast<Vertex>((*rng)() % m), 1),
                                    x(static_cast<Vertex>((*rng)() % m), 2)));
    }
    out.h = Hypergraph3::from_edge_set(3 * m, edges);
    out.parts.part.resize(3 * m);
    for (Vertex j = 0; j < 3; ++j)
        for (Vertex i = 0; i < m; ++i) out.parts.part[x(i, j)] = static_cast<std::uint8_t>(j);
    return out;
}

// Adds `count` random triples not already present.
inline Hypergraph3 with_noise(const Hypergraph3& h, std::size_t count, std::mt19937_64& rng) {
    std::vector<Edge3> edges(h.edges().begin(), h.edges().end());
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(h.n_vertices() - 1));
    std::size_t added = 0;
    while (added < count) {
        Vertex a = pick(rng), b = pick(rng), c = pick(rng);
        if (a == b || b == c || a == c) continue;
        Edge3 e = Edge3::make(a, b, c);
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        edges.push_back(e);
        ++added;
    }
    return Hypergraph3(h.n_vertices(), edges);
}

// Tight 6-cycle on 0..5 with x''_i = 6 + i and a shared pool of vertices;
// every pool vertex p closes both half-spheres of every consecutive pair over
// the rim (y, z, p), with f_i = x''_i y z. Relabeled at random, plus
// noise_fraction * |E| random triples.
inline Hypergraph3 planted_torus(std::mt19937_64& rng, std::size_t pool = 48, double noise_fraction = 0.2) {
    const std::size_t r = 6, n = 2 * r + pool;
    surfex::TopCycleCert cert = surfex::require_topological_cycle(surfex::tight_cycle(r));
    std::vector<Edge3> edges(cert.ordering.begin(), cert.ordering.end());
    for (std::size_t i = 0; i < r; ++i) {
        const Edge3& a = cert.ordering[i];
        const Edge3& b = cert.ordering[(i + 1) % r];
        std::vector<Vertex> yz;
        for (Vertex v : a.v)
            if (b.contains(v)) yz.push_back(v);
        Edge3 f = Edge3::make(static_cast<Vertex>(r + i), yz[0], yz[1]);
        for (Vertex p = 2 * r; p < n; ++p) {
            for (const Edge3& e : {a, b}) {
                Hypergraph3 half = surfex::pair_sphere(e, f, {p}, n);
                edges.insert(edges.end(), half.edges().begin(), half.edges().end());
            }
        }
    }
    Hypergraph3 base = Hypergraph3::from_edge_set(n, edges);
    base = with_noise(base, static_cast<std::size_t>(noise_fraction * base.edge_count()), rng);
    return random_relabel(base, rng);
}

// Chain of g copies of torus7, consecutive copies sharing one face and
// nothing else; vertices 4g + 3 in total.
inline Hypergraph3 planted_genus(int g, std::mt19937_64& rng, std::size_t noise = 0) {
    const std::size_t n = 4 * static_cast<std::size_t>(g) + 3;
    std::vector<Edge3> edges;
    // torus7 vertices 0, 1, 3 land on the previous copy's image of 2, 4, 5
    Vertex shared[3] = {0, 1, 2};
    Vertex next = 3;
    const Hypergraph3 t = torus7();
    for (int copy = 0; copy < g; ++copy) {
        Vertex map[7];
        map[0] = shared[0];
        map[1] = shared[1];
        map[3] = shared[2];
        for (Vertex v : {2u, 4u, 5u, 6u}) map[v] = next++;
        for (const Edge3& e : t.edges()) edges.push_back(Edge3::make(map[e[0]], map[e[1]], map[e[2]]));
        shared[0] = map[2];
        shared[1] = map[4];
        shared[2] = map[5];
    }
    Hypergraph3 base = Hypergraph3::from_edge_set(n, edges);
    base = with_noise(base, noise, rng);
    return random_relabel(base, rng);
}

}  // namespace fixtures
