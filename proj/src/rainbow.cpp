#include "surfex/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>

#include "parallel.hpp"
#include "surfex/random.hpp"

namespace surfex {

void SetColoring::validate(std::size_t n) const {
    if (r < 1) fail(ErrorCode::ColoringIncomplete, "color sets must be non-empty");
    if (colors.size() != n) {
        fail(ErrorCode::ColoringIncomplete,
             "coloring covers " + std::to_string(colors.size()) + " of " + std::to_string(n) + " vertices");
    }
    for (std::size_t v = 0; v < n; ++v) {
        const auto& set = colors[v];
        bool strictly_sorted = std::adjacent_find(set.begin(), set.end(), std::greater_equal<>()) == set.end();
        if (set.size() != static_cast<std::size_t>(r) || !strictly_sorted) {
            fail(ErrorCode::ColoringIncomplete,
                 "vertex " + std::to_string(v) + " does not carry " + std::to_string(r) + " distinct sorted colors");
        }
    }
}

bool SetColoring::disjoint(Vertex a, Vertex b) const {
    const auto& x = colors[a];
    const auto& y = colors[b];
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) return false;
        if (x[i] < y[j]) ++i;
        else ++j;
    }
    return true;
}

PartitionResult three_partition(const Hypergraph3& h, std::uint64_t seed, std::size_t tries) {
    if (tries == 0) fail(ErrorCode::InvalidArgument, "at least one try is needed");
    PartitionResult best;
    std::size_t best_kept = 0;
    for (std::size_t t = 0; t < tries; ++t) {
        KeyedRng rng{seed, 0x3a11u, t};
        PartiteWitness parts;
        parts.part.resize(h.n_vertices());
        for (auto& p : parts.part) p = static_cast<std::uint8_t>(rng.below(3));
        std::size_t kept = 0;
        for (const Edge3& e : h.edges()) kept += parts.transversal(e) ? 1 : 0;
        if (t == 0 || kept > best_kept) {
            best_kept = kept;
            best.parts = std::move(parts);
            best.best_try = t;
        }
    }
    std::vector<Edge3> edges;
    for (const Edge3& e : h.edges()) {
        if (best.parts.transversal(e)) edges.push_back(e);
    }
    best.sub = Hypergraph3(h.n_vertices(), std::move(edges));
    return best;
}

namespace {

std::optional<std::size_t> graph_edge_index(const SimpleGraph& g, Vertex a, Vertex b) {
    VertexPair key = make_pair_sorted(a, b);
    auto edges = g.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
}

std::array<Vertex, 3> by_part(const Edge3& e, const PartiteWitness& parts) {
    std::array<Vertex, 3> x{};
    std::array<bool, 3> seen{};
    for (Vertex v : e.v) {
        std::uint8_t p = v < parts.part.size() ? parts.part[v] : PartiteWitness::kNoPart;
        if (p > 2 || seen[p]) fail(ErrorCode::InvalidWitness, "edge " + to_string(e) + " is not transversal");
        seen[p] = true;
        x[p] = v;
    }
    return x;
}

bool sets_disjoint(const Edge3& e, const Edge3& f) { return intersection_size(e, f) == 0; }

}  // namespace

bool LinkOfEdgesGraph::arrow(Vertex from, Vertex to) const {
    auto idx = graph_edge_index(graph, from, to);
    if (!idx) return false;
    return (direction[*idx] & (from < to ? 1 : 2)) != 0;
}

SetColoring LinkOfEdgesGraph::natural_coloring() const {
    SetColoring c;
    c.r = 3;
    c.colors.reserve(payload.size());
    for (const Edge3& e : payload) c.colors.push_back({e[0], e[1], e[2]});
    return c;
}

Vertex part_vertex(const Edge3& e, const PartiteWitness& parts, int part) {
    if (part < 0 || part > 2) fail(ErrorCode::InvalidArgument, "part index must be 0, 1 or 2");
    return by_part(e, parts)[static_cast<std::size_t>(part)];
}

bool edge_arrow(const Hypergraph3& h, const PartiteWitness& parts, const Edge3& e, const Edge3& f) {
    if (!sets_disjoint(e, f)) return false;
    auto x = by_part(e, parts);
    auto y = by_part(f, parts);
    return h.contains(Edge3::make(x[0], y[1], y[2])) && h.contains(Edge3::make(x[0], x[1], y[2]));
}

LinkOfEdgesGraph build_link_of_edges(const Hypergraph3& h, const PartiteWitness& parts) {
    if (parts.part.size() < h.n_vertices() || !is_three_partite(h, parts)) {
        fail(ErrorCode::InvalidWitness, "partition is not a 3-partite witness for the hypergraph");
    }
    std::map<VertexPair, std::uint8_t> arcs;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        auto x = by_part(h.edge(i), parts);
        // x1 y2 y3 runs over the edges at x1; then x1 x2 y3 and y1 y2 y3 must exist.
        for (std::uint32_t gi : h.incident(x[0])) {
            auto g = by_part(h.edge(gi), parts);
            if (g[1] == x[1] || g[2] == x[2]) continue;
            if (!h.contains(Edge3::make(x[0], x[1], g[2]))) continue;
            for (Vertex y1 : h.pair_neighborhood(g[1], g[2])) {
                if (y1 == x[0] || parts.part[y1] != 0) continue;
                auto j = h.index_of(Edge3::make(y1, g[1], g[2]));
                Vertex a = static_cast<Vertex>(i), b = static_cast<Vertex>(*j);
                arcs[make_pair_sorted(a, b)] |= static_cast<std::uint8_t>(a < b ? 1 : 2);
            }
        }
    }
    LinkOfEdgesGraph l;
    std::vector<VertexPair> pairs;
    pairs.reserve(arcs.size());
    for (auto [pair, bits] : arcs) {
        pairs.push_back(pair);
        l.direction.push_back(bits);
    }
    l.graph = SimpleGraph(h.edge_count(), std::move(pairs));
    l.payload.assign(h.edges().begin(), h.edges().end());
    return l;
}

DiverseCheck is_diverse(const SimpleGraph& g, const SetColoring& c) {
    c.validate(g.n_vertices());
    std::vector<std::pair<std::uint32_t, Vertex>> seen;
    for (Vertex u = 0; u < g.n_vertices(); ++u) {
        seen.clear();
        auto add = [&](Vertex v) {
            for (std::uint32_t color : c.colors[v]) seen.emplace_back(color, v);
        };
        add(u);
        for (Vertex w : g.neighbors(u)) add(w);
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 1; i < seen.size(); ++i) {
            if (seen[i].first == seen[i - 1].first) {
                return DiverseCheck{false, make_pair_sorted(seen[i - 1].second, seen[i].second)};
            }
        }
    }
    return {};
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s;
    if (__builtin_add_overflow(a, b, &s)) fail(ErrorCode::Overflow, "walk count exceeds 64 bits");
    return s;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s;
    if (__builtin_mul_overflow(a, b, &s)) fail(ErrorCode::Overflow, "walk count exceeds 64 bits");
    return s;
}

// Walk counts of length `steps` from `start` to every vertex.
std::vector<std::uint64_t> walk_vector(const SimpleGraph& g, Vertex start, std::size_t steps) {
    std::vector<std::uint64_t> cur(g.n_vertices(), 0), next(g.n_vertices());
    cur[start] = 1;
    for (std::size_t s = 0; s < steps; ++s) {
        for (Vertex w = 0; w < g.n_vertices(); ++w) {
            std::uint64_t total = 0;
            for (Vertex u : g.neighbors(w)) total = checked_add(total, cur[u]);
            next[w] = total;
        }
        cur.swap(next);
    }
    return cur;
}

}  // namespace

std::uint64_t hom_cycle(const SimpleGraph& g, std::size_t len, unsigned threads) {
    if (len < 2 || len % 2 != 0) fail(ErrorCode::InvalidArgument, "cycle length must be even and at least 2");
    const std::size_t half = len / 2;
    std::vector<std::uint64_t> per_start(g.n_vertices(), 0);
    // Closed walks of length 2l at v = sum over z of (walks v -> z of length l)^2.
    detail::parallel_for(g.n_vertices(), threads, [&](std::size_t v) {
        auto walks = walk_vector(g, static_cast<Vertex>(v), half);
        std::uint64_t total = 0;
        for (std::uint64_t w : walks) total = checked_add(total, checked_mul(w, w));
        per_start[v] = total;
    });
    std::uint64_t total = 0;
    for (std::uint64_t x : per_start) total = checked_add(total, x);
    return total;
}

std::uint64_t hom_path_endpoints(const SimpleGraph& g, Vertex y, Vertex z, std::size_t len) {
    if (y >= g.n_vertices() || z >= g.n_vertices()) fail(ErrorCode::VertexOutOfRange, "endpoint out of range");
    if (len < 1) fail(ErrorCode::InvalidArgument, "path length must be positive");
    return walk_vector(g, y, len)[z];
}

SidorenkoCheck sidorenko_check(const SimpleGraph& g, std::size_t k) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
    SidorenkoCheck out;
    out.hom = hom_cycle(g, 2 * k);
    const std::size_t n = g.n_vertices();
    if (n == 0) return out;
    const double two_e = 2.0 * static_cast<double>(g.edge_count());
    out.lower = std::pow(two_e / static_cast<double>(n), static_cast<double>(2 * k));
    out.ratio = out.lower > 0 ? static_cast<double>(out.hom) / out.lower : 0.0;

    // hom * n^{2k} >= (2|E|)^{2k}, exactly when it fits in 128 bits.
    using u128 = unsigned __int128;
    u128 lhs = out.hom, rhs = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < 2 * k && !overflow; ++i) {
        overflow = __builtin_mul_overflow(lhs, static_cast<u128>(n), &lhs) ||
                   __builtin_mul_overflow(rhs, static_cast<u128>(2 * g.edge_count()), &rhs);
    }
    if (!overflow) {
        out.holds = lhs >= rhs;
        return out;
    }
    out.exact = false;
    if (g.edge_count() == 0) return out;
    long double log_lhs = std::log(static_cast<long double>(out.hom));
    long double log_rhs = static_cast<long double>(2 * k) *
                          (std::log(static_cast<long double>(two_e)) - std::log(static_cast<long double>(n)));
    out.holds = out.hom > 0 && log_lhs >= log_rhs - 1e-12L * std::max<long double>(1, std::fabs(log_rhs));
    return out;
}

NonrainbowCount count_nonrainbow_homs(const SimpleGraph& g, const SetColoring& c, std::size_t len,
                                      std::uint64_t cap) {
    if (len < 4 || len % 2 != 0) fail(ErrorCode::InvalidArgument, "cycle length must be even and at least 4");
    auto check = is_diverse(g, c);
    if (!check.diverse) {
        fail(ErrorCode::NotDiverse, "vertices " + std::to_string(check.violation->first) + " and " +
                                        std::to_string(check.violation->second) + " share a color");
    }
    NonrainbowCount out;
    out.total = hom_cycle(g, len);
    if (out.total > cap) {
        fail(ErrorCode::TooLarge, std::to_string(out.total) + " homomorphisms exceed the cap " + std::to_string(cap));
    }
    // A closed walk is rainbow iff its vertices have pairwise disjoint color
    // sets, which forces distinct vertices; count those and subtract.
    std::uint64_t rainbow = 0;
    std::vector<Vertex> path;
    auto extend = [&](auto&& self) -> void {
        Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            bool ok = true;
            for (Vertex u : path) {
                if (!c.disjoint(u, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (path.size() + 1 == len) {
                if (g.has_edge(w, path.front())) ++rainbow;
                continue;
            }
            path.push_back(w);
            self(self);
            path.pop_back();
        }
    };
    for (Vertex v = 0; v < g.n_vertices(); ++v) {
        path.assign(1, v);
        extend(extend);
    }
    out.count = out.total - rainbow;

    const double l = static_cast<double>(len / 2);
    const double shorter = static_cast<double>(hom_cycle(g, len - 2));
    out.bound = 16.0 * l *
                std::sqrt(static_cast<double>(c.r) * l * static_cast<double>(g.max_degree()) * shorter *
                          static_cast<double>(out.total));
    out.holds = static_cast<double>(out.count) <= out.bound * (1 + 1e-12);
    return out;
}

std::optional<std::vector<Vertex>> find_rainbow_cycle(const SimpleGraph& g, const SetColoring& c,
                                                      std::size_t max_len) {
    c.validate(g.n_vertices());
    std::vector<Vertex> path;
    std::size_t target = 0;
    auto extend = [&](auto&& self) -> bool {
        Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            if (w <= path.front()) continue;
            bool ok = true;
            for (Vertex u : path) {
                if (!c.disjoint(u, w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            path.push_back(w);
            if (path.size() == target ? g.has_edge(w, path.front()) : self(self)) return true;
            path.pop_back();
        }
        return false;
    };
    for (target = 3; target <= max_len; ++target) {
        for (Vertex s = 0; s < g.n_vertices(); ++s) {
            path.assign(1, s);
            if (extend(extend)) return path;
        }
    }
    return std::nullopt;
}

namespace {

using Tuple = std::array<Vertex, 3>;

struct Balanced {
    std::vector<Tuple> edges;
    std::array<std::size_t, 3> t{};  // min co-degree per side
    std::array<double, 3> threshold{};
};

struct BalanceConstants {
    double c1[4];
    double c2[4];
};

// c1(1) = 2 and c2(1) = 1 cover the trivial 1-uniform case; each level
// follows the induction step.
constexpr BalanceConstants kConstants = [] {
    BalanceConstants k{};
    k.c1[1] = 2.0;
    k.c2[1] = 1.0;
    for (int r = 2; r <= 3; ++r) {
        k.c1[r] = std::max(4.0 * r * k.c1[r - 1], 4.0 * r * k.c2[r - 1]);
        k.c2[r] = k.c2[r - 1] / 2.0;
    }
    return k;
}();

int h_of(int r) { return r * (r + 1) / 2; }

std::size_t bucket(std::size_t d) { return static_cast<std::size_t>(std::bit_width(d)); }

Tuple drop(const Tuple& x, int side) {
    Tuple y = x;
    y[static_cast<std::size_t>(side)] = ~Vertex{0};
    return y;
}

std::vector<std::map<Tuple, std::size_t>> co_degrees(const std::vector<Tuple>& edges, int r) {
    std::vector<std::map<Tuple, std::size_t>> deg(static_cast<std::size_t>(r));
    for (const Tuple& e : edges) {
        for (int i = 0; i < r; ++i) ++deg[static_cast<std::size_t>(i)][drop(e, i)];
    }
    return deg;
}

Balanced balance(std::vector<Tuple> edges, int r, std::size_t log_n) {
    Balanced out;
    if (edges.empty()) return out;
    if (r == 1) {
        out.t[0] = edges.size();
        out.threshold[0] = static_cast<double>(edges.size());
        out.edges = std::move(edges);
        return out;
    }
    const int last = r - 1;

    // Keep the dyadic bucket of d(X), X = e minus its last coordinate, that
    // covers the most edges.
    std::map<Tuple, std::size_t> deg_last;
    for (const Tuple& e : edges) ++deg_last[drop(e, last)];
    std::map<std::size_t, std::size_t> per_bucket;
    for (const Tuple& e : edges) ++per_bucket[bucket(deg_last[drop(e, last)])];
    std::size_t best_bucket = 0, best_count = 0;
    for (auto [b, count] : per_bucket) {
        if (count > best_count) {
            best_bucket = b;
            best_count = count;
        }
    }
    const double u_last = std::ldexp(1.0, static_cast<int>(best_bucket) - 1);
    std::map<Vertex, std::vector<Tuple>> links;
    for (const Tuple& e : edges) {
        if (bucket(deg_last[drop(e, last)]) != best_bucket) continue;
        Tuple y = e;
        y[static_cast<std::size_t>(last)] = 0;
        links[e[static_cast<std::size_t>(last)]].push_back(y);
    }

    // Balance every link, then keep the links whose thresholds share the
    // most popular bucket vector.
    std::map<std::vector<std::size_t>, std::vector<Tuple>> groups;
    for (auto& [v, link] : links) {
        Balanced sub = balance(std::move(link), r - 1, log_n);
        std::vector<std::size_t> key;
        for (int i = 0; i < r - 1; ++i) key.push_back(bucket(sub.t[static_cast<std::size_t>(i)]));
        auto& group = groups[key];
        for (Tuple y : sub.edges) {
            y[static_cast<std::size_t>(last)] = v;
            group.push_back(y);
        }
    }
    const std::vector<std::size_t>* best_key = nullptr;
    std::size_t best_size = 0;
    for (auto& [key, group] : groups) {
        if (group.size() > best_size) {
            best_key = &key;
            best_size = group.size();
        }
    }
    std::vector<Tuple> current = std::move(groups[*best_key]);

    std::array<double, 3> t{};
    for (int i = 0; i < r - 1; ++i) {
        t[static_cast<std::size_t>(i)] = std::ldexp(1.0, static_cast<int>((*best_key)[static_cast<std::size_t>(i)]) - 1) /
                                         (2.0 * r);
    }
    t[static_cast<std::size_t>(last)] =
        u_last / (2.0 * r * kConstants.c2[r - 1] * std::pow(static_cast<double>(log_n), h_of(r)));

    // Delete edges through any X whose co-degree fell below its side's
    // threshold. Degrees only drop, so the order of deletions is irrelevant.
    for (;;) {
        auto deg = co_degrees(current, r);
        std::vector<Tuple> kept;
        kept.reserve(current.size());
        for (const Tuple& e : current) {
            bool low = false;
            for (int i = 0; i < r && !low; ++i) {
                low = static_cast<double>(deg[static_cast<std::size_t>(i)][drop(e, i)]) < t[static_cast<std::size_t>(i)];
            }
            if (!low) kept.push_back(e);
        }
        if (kept.size() == current.size()) break;
        current.swap(kept);
    }

    auto deg = co_degrees(current, r);
    for (int i = 0; i < r; ++i) {
        std::size_t lo = 0;
        for (auto& [x, d] : deg[static_cast<std::size_t>(i)]) lo = lo == 0 ? d : std::min(lo, d);
        out.t[static_cast<std::size_t>(i)] = lo;
    }
    out.threshold = t;
    out.edges = std::move(current);
    return out;
}

}  // namespace

BalancedResult balanced_subhypergraph(const Hypergraph3& h, const PartiteWitness& parts) {
    if (parts.part.size() < h.n_vertices() || !is_three_partite(h, parts)) {
        fail(ErrorCode::NotThreePartite, "hypergraph is not 3-partite under the given parts");
    }
    if (h.empty()) fail(ErrorCode::EmptyResult, "no edges to balance");
    std::vector<Tuple> tuples;
    tuples.reserve(h.edge_count());
    for (const Edge3& e : h.edges()) tuples.push_back(by_part(e, parts));

    BalancedResult out;
    out.log_n = bucket(h.n_vertices());
    out.c1 = kConstants.c1[3];
    out.c2 = kConstants.c2[3];
    out.h = h_of(3);
    Balanced b = balance(std::move(tuples), 3, out.log_n);
    if (b.edges.empty()) fail(ErrorCode::EmptyResult, "balancing removed every edge");

    std::vector<Edge3> edges;
    for (const Tuple& x : b.edges) edges.push_back(Edge3::make(x[0], x[1], x[2]));
    out.sub = Hypergraph3(h.n_vertices(), std::move(edges));
    out.threshold = b.threshold;

    const double log_pow = std::pow(static_cast<double>(out.log_n), out.h);
    auto deg = co_degrees(b.edges, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t lo = 0, hi = 0;
        for (auto& [x, d] : deg[i]) {
            lo = lo == 0 ? d : std::min(lo, d);
            hi = std::max(hi, d);
        }
        out.t[i] = lo;
        out.max_degree[i] = hi;
        out.window_holds = out.window_holds && static_cast<double>(hi) < out.c1 * static_cast<double>(lo) * log_pow;
    }
    out.retained_fraction = static_cast<double>(out.sub.edge_count()) / static_cast<double>(h.edge_count());
    out.retention_holds = static_cast<double>(out.sub.edge_count()) >=
                          out.c2 * static_cast<double>(h.edge_count()) / log_pow * (1 - 1e-12);
    return out;
}

LinkOfEdgesGraph diverse_subgraph(const LinkOfEdgesGraph& l) {
    const std::size_t n = l.payload.size();
    std::vector<std::vector<Vertex>> chosen(n);
    std::vector<VertexPair> kept;
    std::vector<std::uint8_t> direction;
    auto edges = l.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        bool conflict = false;
        for (Vertex w : chosen[u]) conflict = conflict || !sets_disjoint(l.payload[w], l.payload[v]);
        for (Vertex w : chosen[v]) conflict = conflict || !sets_disjoint(l.payload[w], l.payload[u]);
        if (conflict) continue;
        chosen[u].push_back(v);
        chosen[v].push_back(u);
        kept.push_back(edges[i]);
        direction.push_back(l.direction[i]);
    }
    LinkOfEdgesGraph out;
    out.graph = SimpleGraph(n, std::move(kept));
    out.payload = l.payload;
    out.direction = std::move(direction);
    if (!is_diverse(out.graph, out.natural_coloring()).diverse) {
        fail(ErrorCode::Internal, "greedy conflict-free subgraph is not diverse");
    }
    return out;
}

RainbowConversion rainbow_to_topcycle(const Hypergraph3& h, const PartiteWitness& parts,
                                      const LinkOfEdgesGraph& l, const std::vector<Vertex>& cycle) {
    const std::size_t m = cycle.size();
    if (m < 3) fail(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
    std::vector<Edge3> f;
    for (Vertex v : cycle) {
        if (v >= l.payload.size()) fail(ErrorCode::VertexOutOfRange, "cycle vertex outside L");
        f.push_back(l.payload[v]);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (!sets_disjoint(f[i], f[j])) {
                fail(ErrorCode::NotRainbow, to_string(f[i]) + " and " + to_string(f[j]) + " intersect");
            }
        }
        if (!l.graph.has_edge(cycle[i], cycle[(i + 1) % m])) {
            fail(ErrorCode::NotRainbow, "consecutive cycle vertices are not adjacent in L");
        }
    }

    std::vector<Tuple> x;
    for (const Edge3& e : f) x.push_back(by_part(e, parts));
    std::vector<bool> forward(m);
    RainbowConversion out;
    std::vector<std::array<Edge3, 2>> inter(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = (i + 1) % m;
        if (l.arrow(cycle[i], cycle[j])) {
            forward[i] = true;
            inter[i] = {Edge3::make(x[i][0], x[i][1], x[j][2]), Edge3::make(x[i][0], x[j][1], x[j][2])};
        } else if (l.arrow(cycle[j], cycle[i])) {
            forward[i] = false;
            inter[i] = {Edge3::make(x[j][0], x[i][1], x[i][2]), Edge3::make(x[j][0], x[j][1], x[i][2])};
        } else {
            fail(ErrorCode::MissingInterpolant, "L edge carries no direction");
        }
        for (const Edge3& e : inter[i]) {
            if (!h.contains(e)) fail(ErrorCode::MissingInterpolant, "interpolating edge " + to_string(e) + " is absent");
        }
    }

    // f_i goes when both cycle neighbors point into it or both away from it.
    std::vector<Edge3> kept;
    for (std::size_t i = 0; i < m; ++i) {
        out.sequence.push_back(f[i]);
        out.sequence.push_back(inter[i][0]);
        out.sequence.push_back(inter[i][1]);
        if (forward[(i + m - 1) % m] != forward[i]) ++out.removed;
        else kept.push_back(f[i]);
        kept.push_back(inter[i][0]);
        kept.push_back(inter[i][1]);
    }
    out.cycle = Hypergraph3(h.n_vertices(), std::move(kept));
    auto result = recognize_topological_cycle(out.cycle);
    if (!result.cert) fail(ErrorCode::Internal, "converted sequence is not a topological cycle: " + result.reason);
    if (!result.cert->torus_like) fail(ErrorCode::Internal, "converted cycle in a 3-partite hypergraph is not torus-like");
    out.cert = std::move(*result.cert);
    return out;
}

}  // namespace surfex
