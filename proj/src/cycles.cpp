#include "surfex/cycles.hpp"

#include <algorithm>
#include <numeric>

#include "surfex/surface.hpp"

namespace surfex {

std::string kind_name(CycleKind kind) { return kind == CycleKind::Cylinder ? "Cylinder" : "Moebius"; }

std::string defect_name(TopCycleDefect d) {
    switch (d) {
        case TopCycleDefect::None: return "None";
        case TopCycleDefect::SizeMismatch: return "SizeMismatch";
        case TopCycleDefect::NotACycle: return "NotACycle";
        case TopCycleDefect::LinkNotPath: return "LinkNotPath";
        case TopCycleDefect::EulerNonzero: return "EulerNonzero";
        case TopCycleDefect::BadBoundary: return "BadBoundary";
    }
    return "None";
}

namespace {

struct PairUse {
    VertexPair pair;
    std::uint32_t edge;
    bool operator<(const PairUse& o) const { return pair != o.pair ? pair < o.pair : edge < o.edge; }
};

std::vector<PairUse> pair_uses(const Hypergraph3& h) {
    std::vector<PairUse> uses;
    uses.reserve(h.edge_count() * 3);
    for (std::uint32_t i = 0; i < h.edge_count(); ++i) {
        const Edge3& e = h.edge(i);
        uses.push_back({{e[0], e[1]}, i});
        uses.push_back({{e[0], e[2]}, i});
        uses.push_back({{e[1], e[2]}, i});
    }
    std::sort(uses.begin(), uses.end());
    return uses;
}

// Pairs lying in exactly one edge.
std::vector<VertexPair> boundary_pairs(const std::vector<PairUse>& uses) {
    std::vector<VertexPair> out;
    for (std::size_t i = 0; i < uses.size();) {
        std::size_t j = i;
        while (j < uses.size() && uses[j].pair == uses[i].pair) ++j;
        if (j - i == 1) out.push_back(uses[i].pair);
        i = j;
    }
    return out;
}

bool is_simple_path(const Hypergraph3& h, Vertex v) {
    std::vector<VertexPair> link;
    for (std::uint32_t idx : h.incident(v)) {
        const Edge3& e = h.edge(idx);
        Vertex a = e[0] == v ? e[1] : e[0];
        Vertex b = e[2] == v ? e[1] : e[2];
        link.emplace_back(a, b);
    }
    std::vector<Vertex> ends;
    for (auto [a, b] : link) {
        ends.push_back(a);
        ends.push_back(b);
    }
    std::sort(ends.begin(), ends.end());
    std::size_t distinct = 0, degree_one = 0;
    Vertex start = 0;
    for (std::size_t i = 0; i < ends.size();) {
        std::size_t j = i;
        while (j < ends.size() && ends[j] == ends[i]) ++j;
        if (j - i > 2) return false;
        if (j - i == 1) {
            if (degree_one == 0) start = ends[i];
            ++degree_one;
        }
        ++distinct;
        i = j;
    }
    if (degree_one != 2 || distinct != link.size() + 1) return false;
    // Walk from one end; a path visits every link edge exactly once.
    std::vector<char> used(link.size(), 0);
    Vertex cur = start;
    std::size_t walked = 0;
    while (true) {
        std::size_t next = link.size();
        for (std::size_t i = 0; i < link.size(); ++i) {
            if (!used[i] && (link[i].first == cur || link[i].second == cur)) {
                next = i;
                break;
            }
        }
        if (next == link.size()) break;
        used[next] = 1;
        cur = link[next].first == cur ? link[next].second : link[next].first;
        ++walked;
    }
    return walked == link.size();
}

std::vector<Vertex> shared(const Edge3& a, const Edge3& b) {
    std::vector<Vertex> out;
    for (Vertex x : a.v) {
        if (b.contains(x)) out.push_back(x);
    }
    return out;
}

TopCycleResult failure(TopCycleDefect d, std::string reason) {
    TopCycleResult r;
    r.defect = d;
    r.reason = std::move(reason);
    return r;
}

// Fills s_i and epsilons for a validated proper ordering.
TopCycleResult certify_along(const std::vector<Edge3>& order, const std::vector<VertexPair>& boundary,
                             CycleKind kind) {
    const std::size_t r = order.size();
    TopCycleCert cert;
    cert.ordering = order;
    cert.kind = kind;
    for (std::size_t i = 0; i < r; ++i) {
        const Edge3& prev = order[(i + r - 1) % r];
        const Edge3& cur = order[i];
        const Edge3& next = order[(i + 1) % r];
        auto a = shared(prev, cur);
        auto b = shared(cur, next);
        if (a.size() != 2 || b.size() != 2) {
            return failure(TopCycleDefect::NotACycle, "consecutive edges are not neighboring");
        }
        std::vector<Vertex> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.size() != 1) {
            return failure(TopCycleDefect::NotACycle, "edge {" + to_string(cur) + "} meets both neighbors in the same pair");
        }
        Vertex w = common[0];
        std::vector<Vertex> rest;
        for (Vertex x : cur.v) {
            if (x != w) rest.push_back(x);
        }
        VertexPair s{rest[0], rest[1]};
        if (!std::binary_search(boundary.begin(), boundary.end(), s)) {
            return failure(TopCycleDefect::BadBoundary,
                           "side {" + std::to_string(s.first) + "," + std::to_string(s.second) + "} is interior");
        }
        cert.boundary.push_back(s);
    }
    for (std::size_t i = 0; i < r; ++i) {
        auto [a, b] = cert.boundary[i];
        auto [c, d] = cert.boundary[(i + 1) % r];
        int eps = (a == c || a == d || b == c || b == d) ? 1 : -1;
        cert.epsilons.push_back(eps);
    }
    bool even = r % 2 == 0;
    cert.torus_like = (kind == CycleKind::Cylinder && even) || (kind == CycleKind::Moebius && !even);
    TopCycleResult out;
    out.cert = std::move(cert);
    return out;
}

struct Recognized {
    TopCycleResult result;
    std::vector<VertexPair> boundary;
};

Recognized recognize_impl(const Hypergraph3& h) {
    Recognized out;
    if (h.empty()) fail(ErrorCode::EmptyComplex, "the complex has no 3-edges");
    const std::size_t r = h.edge_count();
    auto verts = h.non_isolated_vertices();
    if (r < 3 || verts.size() != r) {
        out.result = failure(TopCycleDefect::SizeMismatch,
                             std::to_string(r) + " edges on " + std::to_string(verts.size()) + " vertices");
        return out;
    }

    // (b) neighboring relation is a single r-cycle
    auto uses = pair_uses(h);
    std::vector<std::vector<std::uint32_t>> nb(r);
    for (std::size_t i = 0; i < uses.size();) {
        std::size_t j = i;
        while (j < uses.size() && uses[j].pair == uses[i].pair) ++j;
        for (std::size_t a = i; a < j; ++a) {
            for (std::size_t b = i; b < j; ++b) {
                if (a != b) nb[uses[a].edge].push_back(uses[b].edge);
            }
        }
        i = j;
    }
    for (auto& list : nb) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.size() != 2) {
            out.result = failure(TopCycleDefect::NotACycle, "an edge does not have exactly two neighboring edges");
            return out;
        }
    }
    std::vector<Edge3> order;
    std::uint32_t prev = 0, cur = 0;
    std::uint32_t next = nb[0][0];
    order.push_back(h.edge(0));
    while (next != 0) {
        prev = cur;
        cur = next;
        order.push_back(h.edge(cur));
        next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
        if (order.size() > r) break;
    }
    if (order.size() != r) {
        out.result = failure(TopCycleDefect::NotACycle, "the neighboring relation splits into several cycles");
        return out;
    }

    // (c) path links
    for (Vertex v : verts) {
        if (!is_simple_path(h, v)) {
            out.result = failure(TopCycleDefect::LinkNotPath, "link of vertex " + std::to_string(v) + " is not a path");
            return out;
        }
    }

    // (d) chi = 0
    long long chi = euler_characteristic(h);
    if (chi != 0) {
        out.result = failure(TopCycleDefect::EulerNonzero, "Euler characteristic " + std::to_string(chi));
        return out;
    }

    // (e) boundary: one or two cycles through every vertex
    out.boundary = boundary_pairs(uses);
    std::vector<std::size_t> deg(h.n_vertices(), 0);
    std::vector<Vertex> parent(h.n_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : out.boundary) {
        ++deg[a];
        ++deg[b];
        parent[find(a)] = find(b);
    }
    std::size_t components = 0;
    for (Vertex v : verts) {
        if (deg[v] != 2) {
            out.result = failure(TopCycleDefect::BadBoundary,
                                 "vertex " + std::to_string(v) + " has boundary degree " + std::to_string(deg[v]));
            return out;
        }
        if (find(v) == v) ++components;
    }
    if (components != 1 && components != 2) {
        out.result = failure(TopCycleDefect::BadBoundary, std::to_string(components) + " boundary components");
        return out;
    }
    CycleKind kind = components == 2 ? CycleKind::Cylinder : CycleKind::Moebius;
    out.result = certify_along(order, out.boundary, kind);
    return out;
}

}  // namespace

TopCycleResult recognize_topological_cycle(const Hypergraph3& h) { return recognize_impl(h).result; }

TopCycleCert require_topological_cycle(const Hypergraph3& h) {
    TopCycleResult res = recognize_topological_cycle(h);
    if (!res.cert) fail(ErrorCode::NotATopCycle, defect_name(res.defect) + ": " + res.reason);
    return *res.cert;
}

bool is_torus_like(const TopCycleCert& cert) {
    bool even = cert.r() % 2 == 0;
    return (cert.kind == CycleKind::Cylinder && even) || (cert.kind == CycleKind::Moebius && !even);
}

Hypergraph3 tight_cycle(std::size_t r, bool allow_degenerate) {
    if (r < 4) fail(ErrorCode::TooShort, "tight cycle needs r >= 4");
    if (r == 4 && !allow_degenerate) {
        fail(ErrorCode::TooShort, "r = 4 gives the tetrahedron boundary; pass allow_degenerate to build it");
    }
    std::vector<Edge3> edges;
    for (std::size_t i = 0; i < r; ++i) {
        edges.push_back(Edge3::make(static_cast<Vertex>((i + r - 1) % r), static_cast<Vertex>(i),
                                    static_cast<Vertex>((i + 1) % r)));
    }
    return Hypergraph3(r, std::move(edges));
}

Hypergraph3 double_pyramid(std::size_t s) {
    if (s < 3) fail(ErrorCode::TooShort, "double pyramid needs s >= 3");
    std::vector<Edge3> edges;
    Vertex x = static_cast<Vertex>(s), x2 = static_cast<Vertex>(s + 1);
    for (std::size_t i = 0; i < s; ++i) {
        Vertex a = static_cast<Vertex>(i), b = static_cast<Vertex>((i + 1) % s);
        edges.push_back(Edge3::make(x, a, b));
        edges.push_back(Edge3::make(x2, a, b));
    }
    return Hypergraph3(s + 2, std::move(edges));
}

PyramidCycle pyramid_topcycle(std::size_t s, std::size_t r) {
    if (s < 4 || r < 3 || r + 1 > s) {
        fail(ErrorCode::RangeViolation, "need s >= 4 and 3 <= r <= s - 1 (got s=" + std::to_string(s) +
                                            ", r=" + std::to_string(r) + ")");
    }
    Vertex x = static_cast<Vertex>(s), x2 = static_cast<Vertex>(s + 1);
    // 1-based i: e_i = x y_i y_{i+1} with y_i = i - 1.
    auto rim = [&](std::size_t i) { return static_cast<Vertex>((i - 1) % s); };
    auto e = [&](std::size_t i) { return Edge3::make(x, rim(i), rim(i + 1)); };
    auto f = [&](std::size_t i) { return Edge3::make(x2, rim(i), rim(i + 1)); };
    std::vector<Edge3> order;
    for (std::size_t i = 1; i <= r; ++i) order.push_back(e(i));
    for (std::size_t i = r; i <= s; ++i) order.push_back(f(i));
    order.push_back(f(1));

    PyramidCycle out;
    out.cycle = Hypergraph3(s + 2, order);
    Recognized rec = recognize_impl(out.cycle);
    if (!rec.result.cert) fail(ErrorCode::Internal, "pyramid sequence rejected: " + rec.result.reason);
    TopCycleResult along = certify_along(order, rec.boundary, rec.result.cert->kind);
    if (!along.cert) fail(ErrorCode::Internal, "pyramid sequence is not a proper ordering: " + along.reason);
    out.cert = *along.cert;
    return out;
}

bool PartiteWitness::transversal(const Edge3& e) const {
    std::uint8_t seen = 0;
    for (Vertex x : e.v) {
        if (x >= part.size() || part[x] > 2) return false;
        seen |= static_cast<std::uint8_t>(1u << part[x]);
    }
    return seen == 7;
}

bool is_three_partite(const Hypergraph3& h, const PartiteWitness& parts) {
    for (const Edge3& e : h.edges()) {
        if (!parts.transversal(e)) return false;
    }
    return true;
}

bool check_3partite_torus_like(const Hypergraph3& h, const PartiteWitness& parts) {
    if (!is_three_partite(h, parts)) fail(ErrorCode::NotThreePartite, "some edge misses a part");
    return require_topological_cycle(h).torus_like;
}

namespace {

std::vector<Vertex> vertex_set(const Hypergraph3& h) { return h.non_isolated_vertices(); }

}  // namespace

Hypergraph3 union_of(const std::vector<Hypergraph3>& parts) {
    std::size_t n = 0;
    std::vector<Edge3> edges;
    for (const auto& p : parts) {
        n = std::max(n, p.n_vertices());
        edges.insert(edges.end(), p.edges().begin(), p.edges().end());
    }
    return Hypergraph3::from_edge_set(n, std::move(edges));
}

Hypergraph3 glue_spheres(const GlueSpec& spec) {
    const std::size_t r = spec.cycle.r();
    if (spec.spheres.size() != r) {
        fail(ErrorCode::InvalidArgument, "expected " + std::to_string(r) + " spheres, got " +
                                             std::to_string(spec.spheres.size()));
    }
    std::size_t n = 0;
    std::vector<Vertex> cycle_vertices;
    for (const Edge3& e : spec.cycle.ordering) {
        cycle_vertices.insert(cycle_vertices.end(), e.v.begin(), e.v.end());
    }
    std::sort(cycle_vertices.begin(), cycle_vertices.end());
    cycle_vertices.erase(std::unique(cycle_vertices.begin(), cycle_vertices.end()), cycle_vertices.end());

    // Interior vertices: those outside e_i and e_{i+1}.
    std::vector<std::vector<Vertex>> interior(r);
    for (std::size_t i = 0; i < r; ++i) {
        const Hypergraph3& s = spec.spheres[i];
        const Edge3& a = spec.cycle.ordering[i];
        const Edge3& b = spec.cycle.ordering[(i + 1) % r];
        SurfaceClass c = classify_surface(s);
        if (c.kind != SurfaceKind::OrientableGenus || c.param != 0) {
            fail(ErrorCode::NotASphere, "sphere " + std::to_string(i) + " classifies as " + surface_label(c));
        }
        if (!s.contains(a) || !s.contains(b)) {
            fail(ErrorCode::SphereMissingEdge,
                 "sphere " + std::to_string(i) + " lacks {" + to_string(s.contains(a) ? b : a) + "}");
        }
        for (Vertex v : vertex_set(s)) {
            if (!a.contains(v) && !b.contains(v)) interior[i].push_back(v);
        }
        n = std::max(n, s.n_vertices());
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (Vertex v : interior[i]) {
            if (std::binary_search(cycle_vertices.begin(), cycle_vertices.end(), v)) {
                fail(ErrorCode::DisjointnessViolation,
                     "sphere " + std::to_string(i) + " uses cycle vertex " + std::to_string(v));
            }
        }
        for (std::size_t j = 0; j < r; ++j) {
            if (j == i) continue;
            const Hypergraph3& other = spec.spheres[j];
            for (Vertex v : interior[i]) {
                if (v < other.n_vertices() && other.degree(v) > 0) {
                    fail(ErrorCode::DisjointnessViolation, "spheres " + std::to_string(i) + " and " +
                                                               std::to_string(j) + " share vertex " +
                                                               std::to_string(v));
                }
            }
        }
    }
    std::vector<Edge3> edges;
    for (std::size_t i = 0; i < r; ++i) {
        const Edge3& a = spec.cycle.ordering[i];
        const Edge3& b = spec.cycle.ordering[(i + 1) % r];
        for (const Edge3& e : spec.spheres[i].edges()) {
            if (e != a && e != b) edges.push_back(e);
        }
    }
    return Hypergraph3::from_edge_set(n, std::move(edges));
}

Hypergraph3 pair_sphere(const Edge3& e, const Edge3& f, const std::vector<Vertex>& path, std::size_t n_vertices) {
    auto common = shared(e, f);
    if (common.size() != 2) fail(ErrorCode::NotNeighboring, "edges must share exactly two vertices");
    if (path.empty()) fail(ErrorCode::TooShort, "the rim path needs at least one vertex");
    Vertex y = common[0], z = common[1];
    Vertex x = e.other(y, z), x2 = f.other(y, z);
    std::vector<Vertex> rim{y, z};
    rim.insert(rim.end(), path.begin(), path.end());
    std::vector<Edge3> edges;
    for (std::size_t i = 0; i < rim.size(); ++i) {
        Vertex a = rim[i], b = rim[(i + 1) % rim.size()];
        edges.push_back(Edge3::make(x, a, b));
        edges.push_back(Edge3::make(x2, a, b));
    }
    return Hypergraph3(n_vertices, std::move(edges));
}

}  // namespace surfex
