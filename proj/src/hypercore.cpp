#include "surfex/hypercore.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace surfex {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedLine: return "MalformedLine";
        case ErrorCode::DegenerateEdge: return "DegenerateEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::SameVertex: return "SameVertex";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::EmptyComplex: return "EmptyComplex";
        case ErrorCode::NotAClosedSurface: return "NotAClosedSurface";
        case ErrorCode::InconsistentChi: return "InconsistentChi";
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::RangeViolation: return "RangeViolation";
        case ErrorCode::NotATopCycle: return "NotATopCycle";
        case ErrorCode::NotThreePartite: return "NotThreePartite";
        case ErrorCode::DisjointnessViolation: return "DisjointnessViolation";
        case ErrorCode::SphereMissingEdge: return "SphereMissingEdge";
        case ErrorCode::NotASphere: return "NotASphere";
        case ErrorCode::TooLargeForExact: return "TooLargeForExact";
        case ErrorCode::NotNeighboring: return "NotNeighboring";
        case ErrorCode::InvalidWitness: return "InvalidWitness";
        case ErrorCode::ColoringIncomplete: return "ColoringIncomplete";
        case ErrorCode::NotDiverse: return "NotDiverse";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::EmptyResult: return "EmptyResult";
        case ErrorCode::NotRainbow: return "NotRainbow";
        case ErrorCode::MissingInterpolant: return "MissingInterpolant";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Edge3 Edge3::make(Vertex a, Vertex b, Vertex c) {
    if (a == b || b == c || a == c) {
        fail(ErrorCode::DegenerateEdge, "edge {" + std::to_string(a) + "," + std::to_string(b) +
                                            "," + std::to_string(c) + "} repeats a vertex");
    }
    Edge3 e{{a, b, c}};
    std::sort(e.v.begin(), e.v.end());
    return e;
}

Vertex Edge3::other(Vertex a, Vertex b) const {
    for (Vertex x : v) {
        if (x != a && x != b) return x;
    }
    fail(ErrorCode::Internal, "Edge3::other called with a non-member pair");
}

std::size_t intersection_size(const Edge3& e, const Edge3& f) {
    std::size_t count = 0;
    for (Vertex x : e.v) count += f.contains(x) ? 1 : 0;
    return count;
}

bool neighboring(const Edge3& e, const Edge3& f) { return intersection_size(e, f) == 2; }

std::string to_string(const Edge3& e) {
    return std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]);
}

// ---------------------------------------------------------------------------
// Hypergraph3

namespace {

void check_range(std::size_t n, const Edge3& e) {
    if (e[2] >= n) {
        fail(ErrorCode::VertexOutOfRange, "edge {" + to_string(e) + "} exceeds vertex count " +
                                              std::to_string(n));
    }
}

}  // namespace

Hypergraph3::Hypergraph3(std::size_t n_vertices, std::vector<Edge3> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
    for (const Edge3& e : edges_) {
        if (e[0] >= e[1] || e[1] >= e[2]) {
            fail(ErrorCode::DegenerateEdge, "edge {" + to_string(e) + "} is not a sorted triple");
        }
        check_range(n_, e);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        fail(ErrorCode::DuplicateEdge, "duplicate edge {" + to_string(*dup) + "}");
    }
    build_incidence();
}

Hypergraph3 Hypergraph3::from_edge_set(std::size_t n_vertices, std::vector<Edge3> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph3(n_vertices, std::move(edges));
}

void Hypergraph3::build_incidence() {
    incidence_offsets_.assign(n_ + 1, 0);
    for (const Edge3& e : edges_) {
        for (Vertex x : e.v) ++incidence_offsets_[x + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) incidence_offsets_[i + 1] += incidence_offsets_[i];
    incidence_.resize(edges_.size() * 3);
    std::vector<std::uint32_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
        for (Vertex x : edges_[i].v) incidence_[cursor[x]++] = i;
    }
}

bool Hypergraph3::contains(const Edge3& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<std::size_t> Hypergraph3::index_of(const Edge3& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const std::uint32_t> Hypergraph3::incident(Vertex v) const {
    if (v >= n_) return {};
    return std::span<const std::uint32_t>(incidence_).subspan(
        incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]);
}

std::vector<Vertex> Hypergraph3::non_isolated_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
        if (degree(v) > 0) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> Hypergraph3::pair_neighborhood(Vertex y, Vertex z) const {
    std::vector<Vertex> out;
    if (y >= n_ || z >= n_) return out;
    Vertex pivot = degree(y) <= degree(z) ? y : z;
    Vertex partner = pivot == y ? z : y;
    for (std::uint32_t idx : incident(pivot)) {
        const Edge3& e = edges_[idx];
        if (e.contains(partner)) out.push_back(e.other(pivot, partner));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(std::size_t n_vertices, std::vector<VertexPair> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u == v) fail(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (v >= n_) {
            fail(ErrorCode::VertexOutOfRange, "graph edge {" + std::to_string(u) + "," +
                                                  std::to_string(v) + "} exceeds vertex count " +
                                                  std::to_string(n_));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        fail(ErrorCode::DuplicateEdge, "duplicate graph edge {" + std::to_string(dup->first) + "," +
                                           std::to_string(dup->second) + "}");
    }
    offsets_.assign(n_ + 1, 0);
    for (auto [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(edges_.size() * 2);
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    // Edges are visited in sorted order, so each neighbor list is sorted too
    // except for the interleaving of smaller and larger neighbors.
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }
}

SimpleGraph SimpleGraph::from_edge_set(std::size_t n_vertices, std::vector<VertexPair> edges) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SimpleGraph(n_vertices, std::move(edges));
}

std::span<const Vertex> SimpleGraph::neighbors(Vertex v) const {
    if (v >= n_) return {};
    return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t SimpleGraph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

// ---------------------------------------------------------------------------
// Link structure

namespace {

void require_vertex(const Hypergraph3& h, Vertex x) {
    if (x >= h.n_vertices()) {
        fail(ErrorCode::VertexOutOfRange,
             "vertex " + std::to_string(x) + " out of range (n=" + std::to_string(h.n_vertices()) + ")");
    }
}

std::vector<VertexPair> link_pairs(const Hypergraph3& h, Vertex x) {
    std::vector<VertexPair> pairs;
    for (std::uint32_t idx : h.incident(x)) {
        const Edge3& e = h.edge(idx);
        Vertex a = e[0] == x ? e[1] : e[0];
        Vertex b = e[2] == x ? e[1] : e[2];
        pairs.emplace_back(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace

SimpleGraph link_graph(const Hypergraph3& h, Vertex x) {
    require_vertex(h, x);
    return SimpleGraph(h.n_vertices(), link_pairs(h, x));
}

SimpleGraph colink_graph(const Hypergraph3& h, Vertex x, Vertex x2) {
    require_vertex(h, x);
    require_vertex(h, x2);
    if (x == x2) fail(ErrorCode::SameVertex, "colink graph needs two distinct vertices");
    auto a = link_pairs(h, x);
    auto b = link_pairs(h, x2);
    std::vector<VertexPair> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return SimpleGraph(h.n_vertices(), std::move(common));
}

std::vector<Vertex> pair_neighborhood(const Hypergraph3& h, Vertex y, Vertex z) {
    require_vertex(h, y);
    require_vertex(h, z);
    if (y == z) fail(ErrorCode::SameVertex, "pair neighborhood needs two distinct vertices");
    return h.pair_neighborhood(y, z);
}

Hypergraph3 induced(const Hypergraph3& h, std::span<const char> keep) {
    std::vector<Edge3> kept;
    for (const Edge3& e : h.edges()) {
        if (keep[e[0]] && keep[e[1]] && keep[e[2]]) kept.push_back(e);
    }
    return Hypergraph3(h.n_vertices(), std::move(kept));
}

Hypergraph3 compact_vertices(const Hypergraph3& h, std::vector<Vertex>* mapping) {
    std::vector<Vertex> old_ids = h.non_isolated_vertices();
    std::vector<Vertex> new_id(h.n_vertices(), 0);
    for (Vertex i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = i;
    std::vector<Edge3> edges;
    edges.reserve(h.edge_count());
    for (const Edge3& e : h.edges()) {
        edges.push_back(Edge3::make(new_id[e[0]], new_id[e[1]], new_id[e[2]]));
    }
    if (mapping) *mapping = old_ids;
    return Hypergraph3(old_ids.size(), std::move(edges));
}

Hypergraph3 relabel(const Hypergraph3& h, std::span<const Vertex> permutation) {
    if (permutation.size() != h.n_vertices()) {
        fail(ErrorCode::InvalidArgument, "relabel: permutation size does not match vertex count");
    }
    std::vector<Edge3> edges;
    edges.reserve(h.edge_count());
    for (const Edge3& e : h.edges()) {
        edges.push_back(Edge3::make(permutation[e[0]], permutation[e[1]], permutation[e[2]]));
    }
    return Hypergraph3(h.n_vertices(), std::move(edges));
}

bool is_subhypergraph(const Hypergraph3& sub, const Hypergraph3& h) {
    for (const Edge3& e : sub.edges()) {
        if (!h.contains(e)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

struct ParsedList {
    std::optional<std::size_t> header_n;
    std::vector<std::vector<std::uint64_t>> rows;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_token(std::string_view tok, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value > 0xFFFFFFFEull) {
        fail(ErrorCode::MalformedLine,
             "line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not a vertex id");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

ParsedList parse_list(std::string_view text, std::size_t arity) {
    ParsedList out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (line.size() >= 2 && line[1] == 'n' && (line.size() == 2 || line[2] == ' ' || line[2] == '\t')) {
                auto toks = split_ws(line.substr(2));
                if (toks.size() != 1) {
                    fail(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": bad #n header");
                }
                out.header_n = parse_token(toks[0], line_no);
            }
            continue;
        }
        auto toks = split_ws(line);
        if (toks.size() != arity) {
            fail(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": expected " +
                                               std::to_string(arity) + " vertex ids, got " +
                                               std::to_string(toks.size()));
        }
        std::vector<std::uint64_t> row;
        for (auto tok : toks) row.push_back(parse_token(tok, line_no));
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::size_t resolve_vertex_count(const ParsedList& parsed) {
    std::size_t needed = 0;
    for (const auto& row : parsed.rows) {
        for (auto x : row) needed = std::max<std::size_t>(needed, x + 1);
    }
    if (parsed.header_n) {
        if (*parsed.header_n < needed) {
            fail(ErrorCode::VertexOutOfRange, "#n header " + std::to_string(*parsed.header_n) +
                                                  " is smaller than max id + 1 = " + std::to_string(needed));
        }
        return *parsed.header_n;
    }
    return needed;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Hypergraph3 parse_hypergraph(std::string_view text) {
    ParsedList parsed = parse_list(text, 3);
    std::size_t n = resolve_vertex_count(parsed);
    std::vector<Edge3> edges;
    edges.reserve(parsed.rows.size());
    for (const auto& row : parsed.rows) {
        edges.push_back(Edge3::make(static_cast<Vertex>(row[0]), static_cast<Vertex>(row[1]),
                                    static_cast<Vertex>(row[2])));
    }
    return Hypergraph3(n, std::move(edges));
}

Hypergraph3 load_hypergraph(const std::string& path) { return parse_hypergraph(read_file(path)); }

std::string serialize(const Hypergraph3& h) {
    std::string out = "#n " + std::to_string(h.n_vertices()) + "\n";
    for (const Edge3& e : h.edges()) {
        out += to_string(e);
        out += '\n';
    }
    return out;
}

SimpleGraph parse_graph(std::string_view text) {
    ParsedList parsed = parse_list(text, 2);
    std::size_t n = resolve_vertex_count(parsed);
    std::vector<VertexPair> edges;
    for (const auto& row : parsed.rows) {
        edges.emplace_back(static_cast<Vertex>(row[0]), static_cast<Vertex>(row[1]));
    }
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string serialize(const SimpleGraph& g) {
    std::string out = "#n " + std::to_string(g.n_vertices()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

}  // namespace surfex
