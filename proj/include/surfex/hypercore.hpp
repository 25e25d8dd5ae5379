#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfex/error.hpp"

namespace surfex {

using Vertex = std::uint32_t;

// A 3-element vertex set stored as a sorted triple.
struct Edge3 {
    std::array<Vertex, 3> v{};

    // Sorts the three ids; throws DegenerateEdge on a repeated vertex.
    static Edge3 make(Vertex a, Vertex b, Vertex c);

    Vertex operator[](std::size_t i) const { return v[i]; }
    bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }

    // The vertex of this edge outside the pair {a, b}; both must be members.
    Vertex other(Vertex a, Vertex b) const;

    auto operator<=>(const Edge3&) const = default;
    bool operator==(const Edge3&) const = default;
};

using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair make_pair_sorted(Vertex a, Vertex b) {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

std::size_t intersection_size(const Edge3& e, const Edge3& f);

// Two edges are neighboring iff they share exactly two vertices.
bool neighboring(const Edge3& e, const Edge3& f);

std::string to_string(const Edge3& e);

// Immutable 3-uniform hypergraph on the vertex set [0, n).
class Hypergraph3 {
public:
    Hypergraph3() = default;

    // Validates ids and rejects duplicate edges (DuplicateEdge).
    Hypergraph3(std::size_t n_vertices, std::vector<Edge3> edges);

    // Same as the constructor but silently merges duplicates.
    static Hypergraph3 from_edge_set(std::size_t n_vertices, std::vector<Edge3> edges);

    std::size_t n_vertices() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    // Sorted lexicographically.
    std::span<const Edge3> edges() const { return edges_; }
    const Edge3& edge(std::size_t i) const { return edges_[i]; }

    bool contains(const Edge3& e) const;
    std::optional<std::size_t> index_of(const Edge3& e) const;

    // Indices of the edges containing v, ascending.
    std::span<const std::uint32_t> incident(Vertex v) const;
    std::size_t degree(Vertex v) const { return incident(v).size(); }

    std::vector<Vertex> non_isolated_vertices() const;

    // N(y, z): all w with wyz an edge, ascending.
    std::vector<Vertex> pair_neighborhood(Vertex y, Vertex z) const;

    bool operator==(const Hypergraph3& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void build_incidence();

    std::size_t n_ = 0;
    std::vector<Edge3> edges_;
    std::vector<std::uint32_t> incidence_offsets_;
    std::vector<std::uint32_t> incidence_;
};

// Immutable simple undirected graph on [0, n).
class SimpleGraph {
public:
    SimpleGraph() = default;

    // Rejects loops (SelfLoop), duplicates (DuplicateEdge) and bad ids.
    SimpleGraph(std::size_t n_vertices, std::vector<VertexPair> edges);

    static SimpleGraph from_edge_set(std::size_t n_vertices, std::vector<VertexPair> edges);

    std::size_t n_vertices() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted pairs (u < v), lexicographic.
    std::span<const VertexPair> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    std::size_t max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<Vertex> adjacency_;
};

SimpleGraph link_graph(const Hypergraph3& h, Vertex x);
SimpleGraph colink_graph(const Hypergraph3& h, Vertex x, Vertex x2);
std::vector<Vertex> pair_neighborhood(const Hypergraph3& h, Vertex y, Vertex z);

// Sub-hypergraph induced on the vertices flagged in `keep` (same numbering).
Hypergraph3 induced(const Hypergraph3& h, std::span<const char> keep);

// Relabels non-isolated vertices to 0..k-1 in ascending order; `mapping`
// receives the original id of every new id.
Hypergraph3 compact_vertices(const Hypergraph3& h, std::vector<Vertex>* mapping = nullptr);

Hypergraph3 relabel(const Hypergraph3& h, std::span<const Vertex> permutation);

bool is_subhypergraph(const Hypergraph3& sub, const Hypergraph3& h);

// Edge-list text format: one "u v w" triple per line, optional "#n <count>"
// header, other '#' lines ignored.
Hypergraph3 parse_hypergraph(std::string_view text);
Hypergraph3 load_hypergraph(const std::string& path);
std::string serialize(const Hypergraph3& h);

// Same format with pairs, for simple graphs.
SimpleGraph parse_graph(std::string_view text);
SimpleGraph load_graph(const std::string& path);
std::string serialize(const SimpleGraph& g);

}  // namespace surfex
