#include "surfex/surface.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace surfex {

SurfaceClass SurfaceClass::orientable(int g) {
    SurfaceClass c;
    c.kind = SurfaceKind::OrientableGenus;
    c.param = g;
    c.chi = 2 - 2LL * g;
    return c;
}

SurfaceClass SurfaceClass::crosscaps(int k) {
    SurfaceClass c;
    c.kind = SurfaceKind::NonOrientableCrossCaps;
    c.param = k;
    c.chi = 2LL - k;
    return c;
}

SurfaceClass SurfaceClass::not_surface(std::string why) {
    SurfaceClass c;
    c.reason = std::move(why);
    return c;
}

long long SurfaceClass::euler() const {
    if (kind == SurfaceKind::OrientableGenus) return 2 - 2LL * param;
    if (kind == SurfaceKind::NonOrientableCrossCaps) return 2LL - param;
    fail(ErrorCode::NotAClosedSurface, "no Euler characteristic for a non-surface verdict");
}

std::string kind_name(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::OrientableGenus: return "OrientableGenus";
        case SurfaceKind::NonOrientableCrossCaps: return "NonOrientableCrossCaps";
        case SurfaceKind::NotAClosedSurface: return "NotAClosedSurface";
    }
    return "NotAClosedSurface";
}

std::string surface_label(const SurfaceClass& c) {
    switch (c.kind) {
        case SurfaceKind::OrientableGenus:
            if (c.param == 0) return "sphere";
            if (c.param == 1) return "torus";
            return "genus:" + std::to_string(c.param);
        case SurfaceKind::NonOrientableCrossCaps:
            return "crosscaps:" + std::to_string(c.param);
        case SurfaceKind::NotAClosedSurface:
            break;
    }
    return "none";
}

std::optional<SurfaceClass> parse_surface_label(const std::string& text) {
    if (text == "sphere") return SurfaceClass::orientable(0);
    if (text == "torus") return SurfaceClass::orientable(1);
    auto number_after = [&](const std::string& prefix) -> std::optional<int> {
        if (text.rfind(prefix, 0) != 0 || text.size() == prefix.size()) return std::nullopt;
        int value = 0;
        for (std::size_t i = prefix.size(); i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9' || value > 100000) return std::nullopt;
            value = value * 10 + (text[i] - '0');
        }
        return value;
    };
    if (auto g = number_after("genus:")) return SurfaceClass::orientable(*g);
    if (auto k = number_after("crosscaps:"); k && *k >= 1) return SurfaceClass::crosscaps(*k);
    return std::nullopt;
}

namespace {

// Every 2-subset of every edge, with multiplicity, sorted.
std::vector<VertexPair> all_edge_pairs(const Hypergraph3& h) {
    std::vector<VertexPair> pairs;
    pairs.reserve(h.edge_count() * 3);
    for (const Edge3& e : h.edges()) {
        pairs.emplace_back(e[0], e[1]);
        pairs.emplace_back(e[0], e[2]);
        pairs.emplace_back(e[1], e[2]);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

void require_nonempty(const Hypergraph3& h) {
    if (h.empty()) fail(ErrorCode::EmptyComplex, "the complex has no 3-edges");
}

struct UnionFind {
    std::vector<Vertex> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    Vertex find(Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(Vertex a, Vertex b) { parent[find(a)] = find(b); }
};

// True iff the pairs form one cycle through at least three vertices.
bool single_cycle(std::vector<VertexPair> link) {
    if (link.size() < 3) return false;
    std::vector<std::pair<Vertex, Vertex>> half;
    half.reserve(link.size() * 2);
    for (auto [a, b] : link) {
        half.emplace_back(a, b);
        half.emplace_back(b, a);
    }
    std::sort(half.begin(), half.end());
    for (std::size_t i = 0; i < half.size(); i += 2) {
        if (half[i].first != half[i + 1].first) return false;
        if (i + 2 < half.size() && half[i + 2].first == half[i].first) return false;
    }
    // Each vertex has exactly two neighbors: half[2j] and half[2j+1].
    auto slot = [&](Vertex v) {
        auto it = std::lower_bound(half.begin(), half.end(), std::pair<Vertex, Vertex>{v, 0});
        return static_cast<std::size_t>(it - half.begin());
    };
    const std::size_t n_link = half.size() / 2;
    Vertex start = half[0].first;
    Vertex prev = start;
    Vertex cur = half[0].second;
    std::size_t steps = 1;
    while (cur != start) {
        std::size_t s = slot(cur);
        Vertex next = half[s].second == prev ? half[s + 1].second : half[s].second;
        prev = cur;
        cur = next;
        if (++steps > n_link) return false;
    }
    return steps == n_link;
}

}  // namespace

SkeletonCounts skeleton_counts(const Hypergraph3& h) {
    require_nonempty(h);
    SkeletonCounts c;
    c.f = h.edge_count();
    c.v = h.non_isolated_vertices().size();
    auto pairs = all_edge_pairs(h);
    c.e = static_cast<std::size_t>(std::unique(pairs.begin(), pairs.end()) - pairs.begin());
    return c;
}

long long euler_characteristic(const Hypergraph3& h) {
    SkeletonCounts c = skeleton_counts(h);
    return static_cast<long long>(c.v) - static_cast<long long>(c.e) + static_cast<long long>(c.f);
}

SurfaceCheck is_closed_surface(const Hypergraph3& h) {
    require_nonempty(h);
    SurfaceCheck out;
    for (Vertex v = 0; v < h.n_vertices(); ++v) {
        auto inc = h.incident(v);
        if (inc.empty()) continue;
        std::vector<VertexPair> link;
        link.reserve(inc.size());
        for (std::uint32_t idx : inc) {
            const Edge3& e = h.edge(idx);
            Vertex a = e[0] == v ? e[1] : e[0];
            Vertex b = e[2] == v ? e[1] : e[2];
            link.emplace_back(a, b);
        }
        if (!single_cycle(std::move(link))) {
            out.defect = SurfaceDefect::BadLink;
            out.vertex = v;
            out.reason = "link of vertex " + std::to_string(v) + " is not a single cycle";
            return out;
        }
    }
    UnionFind uf(h.n_vertices());
    for (const Edge3& e : h.edges()) {
        uf.unite(e[0], e[1]);
        uf.unite(e[0], e[2]);
    }
    Vertex root = uf.find(h.edge(0)[0]);
    for (Vertex v = 0; v < h.n_vertices(); ++v) {
        if (h.degree(v) > 0 && uf.find(v) != root) {
            out.defect = SurfaceDefect::Disconnected;
            out.reason = "Disconnected";
            return out;
        }
    }
    out.ok = true;
    return out;
}

bool is_orientable(const Hypergraph3& h) {
    SurfaceCheck check = is_closed_surface(h);
    if (!check.ok) fail(ErrorCode::NotAClosedSurface, check.reason);

    // Each triangle (v0<v1<v2) with sign +1 traverses v0->v1->v2->v0. Its side
    // {a<b} is then traversed a->b for (v0,v1), (v1,v2) and b->a for (v0,v2).
    struct Side {
        VertexPair pair;
        std::uint32_t tri;
        int dir;
    };
    std::vector<Side> sides;
    sides.reserve(h.edge_count() * 3);
    for (std::uint32_t t = 0; t < h.edge_count(); ++t) {
        const Edge3& e = h.edge(t);
        sides.push_back({{e[0], e[1]}, t, +1});
        sides.push_back({{e[1], e[2]}, t, +1});
        sides.push_back({{e[0], e[2]}, t, -1});
    }
    std::sort(sides.begin(), sides.end(), [](const Side& a, const Side& b) {
        return a.pair != b.pair ? a.pair < b.pair : a.tri < b.tri;
    });
    // On a closed surface every side occurs exactly twice.
    std::vector<std::vector<std::pair<std::uint32_t, int>>> dual(h.edge_count());
    for (std::size_t i = 0; i + 1 < sides.size(); i += 2) {
        const Side& a = sides[i];
        const Side& b = sides[i + 1];
        if (a.pair != b.pair) fail(ErrorCode::Internal, "side not shared by two triangles");
        // sign[a]*dir_a == -sign[b]*dir_b  <=>  sign[b] == -dir_a*dir_b*sign[a]
        int rel = -a.dir * b.dir;
        dual[a.tri].emplace_back(b.tri, rel);
        dual[b.tri].emplace_back(a.tri, rel);
    }
    std::vector<int> sign(h.edge_count(), 0);
    std::queue<std::uint32_t> queue;
    sign[0] = 1;
    queue.push(0);
    while (!queue.empty()) {
        std::uint32_t t = queue.front();
        queue.pop();
        for (auto [u, rel] : dual[t]) {
            int want = rel * sign[t];
            if (sign[u] == 0) {
                sign[u] = want;
                queue.push(u);
            } else if (sign[u] != want) {
                return false;
            }
        }
    }
    return true;
}

SurfaceClass classify_surface(const Hypergraph3& h) {
    if (h.empty()) return SurfaceClass::not_surface("EmptyComplex");
    SurfaceCheck check = is_closed_surface(h);
    if (!check.ok) {
        SurfaceClass c = SurfaceClass::not_surface(check.reason);
        c.chi = euler_characteristic(h);
        return c;
    }
    long long chi = euler_characteristic(h);
    if (is_orientable(h)) {
        if ((2 - chi) % 2 != 0 || chi > 2) {
            fail(ErrorCode::InconsistentChi, "orientable surface with chi = " + std::to_string(chi));
        }
        return SurfaceClass::orientable(static_cast<int>((2 - chi) / 2));
    }
    if (chi > 1) fail(ErrorCode::InconsistentChi, "non-orientable surface with chi = " + std::to_string(chi));
    return SurfaceClass::crosscaps(static_cast<int>(2 - chi));
}

bool face_count_identity(const Hypergraph3& h) {
    SurfaceClass c = classify_surface(h);
    if (!c.is_surface()) fail(ErrorCode::NotAClosedSurface, c.reason);
    SkeletonCounts counts = skeleton_counts(h);
    long long g = 2 - *c.chi;
    return static_cast<long long>(counts.f) == 2LL * static_cast<long long>(counts.v) - 4 + 2 * g;
}

}  // namespace surfex
