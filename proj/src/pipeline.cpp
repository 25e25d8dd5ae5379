#include "surfex/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parallel.hpp"
#include "surfex/enumerate.hpp"
#include "surfex/error.hpp"
#include "surfex/rainbow.hpp"
#include "surfex/random.hpp"

namespace surfex {

namespace {

// Shortest cycle of g as a vertex sequence; BFS from every root, keeping
// only closings whose two tree paths meet at the root alone.
std::optional<std::vector<Vertex>> shortest_cycle(const SimpleGraph& g) {
    const std::size_t n = g.n_vertices();
    std::optional<std::vector<Vertex>> best;
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex root = 0; root < n; ++root) {
        if (g.degree(root) < 2) continue;
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex u = queue[qi];
            if (best && 2 * dist[u] + 1 >= static_cast<int>(best->size())) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                    continue;
                }
                if (w == parent[u] && u != root) continue;
                if (dist[w] < dist[u]) continue;  // seen from the other side
                std::vector<Vertex> a{u}, b{w};
                while (a.back() != root) a.push_back(parent[a.back()]);
                while (b.back() != root) b.push_back(parent[b.back()]);
                std::set<Vertex> seen(a.begin(), a.end() - 1);
                bool simple = true;
                for (std::size_t i = 0; i + 1 < b.size(); ++i) simple = simple && !seen.count(b[i]);
                if (!simple || a.size() + b.size() - 1 < 3) continue;
                // root ... u then w ... back toward root
                std::vector<Vertex> cycle(a.rbegin(), a.rend());
                cycle.insert(cycle.end(), b.begin(), b.end() - 1);
                if (!best || cycle.size() < best->size()) best = std::move(cycle);
            }
        }
    }
    return best;
}

Hypergraph3 pyramid_over(Vertex x, Vertex x2, const std::vector<Vertex>& rim, std::size_t n) {
    std::vector<Edge3> edges;
    for (std::size_t i = 0; i < rim.size(); ++i) {
        edges.push_back(Edge3::make(x, rim[i], rim[(i + 1) % rim.size()]));
        edges.push_back(Edge3::make(x2, rim[i], rim[(i + 1) % rim.size()]));
    }
    return Hypergraph3(n, std::move(edges));
}

std::vector<Vertex> shared_pair(const Edge3& e, const Edge3& f) {
    std::vector<Vertex> out;
    for (Vertex v : e.v) {
        if (f.contains(v)) out.push_back(v);
    }
    return out;
}

std::vector<Edge3> sorted_edges(const TopCycleCert& c) {
    std::vector<Edge3> e = c.ordering;
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

std::optional<DoublePyramid> bes_double_pyramid(const Hypergraph3& h) {
    // |colink(x, x')| = number of pairs {a, b} with x, x' both in N(a, b).
    std::map<VertexPair, std::size_t> colink_size;
    std::set<VertexPair> done;
    for (const Edge3& e : h.edges()) {
        const VertexPair sides[3] = {{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}};
        for (auto [a, b] : sides) {
            if (!done.insert({a, b}).second) continue;
            auto nb = h.pair_neighborhood(a, b);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) ++colink_size[{nb[i], nb[j]}];
        }
    }
    std::vector<std::pair<std::size_t, VertexPair>> order;
    for (auto [pair, size] : colink_size) {
        if (size >= 3) order.emplace_back(size, pair);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto [size, pair] : order) {
        auto cycle = shortest_cycle(colink_graph(h, pair.first, pair.second));
        if (!cycle) continue;
        DoublePyramid out;
        out.x = pair.first;
        out.x2 = pair.second;
        out.cycle = std::move(*cycle);
        out.sphere = pyramid_over(out.x, out.x2, out.cycle, h.n_vertices());
        return out;
    }
    return std::nullopt;
}

std::optional<Hypergraph3> find_sphere_through(const Hypergraph3& h, const Edge3& e, const Edge3& f,
                                               const std::vector<char>& allowed) {
    if (!neighboring(e, f)) fail(ErrorCode::NotNeighboring, to_string(e) + " and " + to_string(f) + " are not neighboring");
    auto yz = shared_pair(e, f);
    const Vertex y = yz[0], z = yz[1];
    const Vertex x = e.other(y, z), x2 = f.other(y, z);
    SimpleGraph g = colink_graph(h, x, x2);
    if (!g.has_edge(y, z)) return std::nullopt;
    auto interior_ok = [&](Vertex v) {
        return v != x && v != x2 && v != y && v != z && v < allowed.size() && allowed[v];
    };
    // Shortest y-z path of length >= 2 through allowed interior vertices.
    std::vector<Vertex> parent(g.n_vertices(), ~Vertex{0});
    std::vector<Vertex> queue;
    for (Vertex w : g.neighbors(y)) {
        if (interior_ok(w)) {
            parent[w] = y;
            queue.push_back(w);
        }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex u = queue[qi];
        if (g.has_edge(u, z)) {
            std::vector<Vertex> rim_tail;  // rim is y, z, then back along the path
            for (Vertex v = u; v != y; v = parent[v]) rim_tail.push_back(v);
            auto sphere = pair_sphere(e, f, rim_tail, h.n_vertices());
            return sphere;
        }
        for (Vertex w : g.neighbors(u)) {
            if (parent[w] == ~Vertex{0} && interior_ok(w)) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

CycleCandidates find_torus_like_cycles(const Hypergraph3& h, std::size_t max_len, std::uint64_t seed,
                                       std::size_t limit, std::size_t node_budget,
                                       const CycleFilters& filters) {
    CycleCandidates out;
    std::set<std::vector<Edge3>> seen;
    auto offer = [&](TopCycleCert cert) {
        if (cert.r() > max_len || !cert.torus_like) return;
        if (!seen.insert(sorted_edges(cert)).second) return;
        if (filters.accept && !filters.accept(cert)) return;
        out.cycles.push_back(std::move(cert));
    };
    if (h.empty() || limit == 0) return out;

    // Rainbow cycles in L of a 3-partite part convert to cycles of length
    // between 2m and 3m.
    if (max_len >= 6) {
        auto part = three_partition(h, seed);
        if (!part.sub.empty()) {
            LinkOfEdgesGraph l = build_link_of_edges(part.sub, part.parts);
            for (const LinkOfEdgesGraph& graph : {diverse_subgraph(l), l}) {
                auto rc = find_rainbow_cycle(graph.graph, graph.natural_coloring(), max_len / 2);
                if (!rc) continue;
                std::size_t before = out.cycles.size();
                offer(rainbow_to_topcycle(part.sub, part.parts, graph, *rc).cert);
                out.from_rainbow += out.cycles.size() - before;
                if (out.cycles.size() >= limit) return out;
            }
        }
    }

    // Direct search: sequences of edges where each edge neighbors only its
    // predecessor among the earlier ones, closing back to the smallest edge.
    std::vector<std::vector<std::uint32_t>> adjacent(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const Edge3& e = h.edge(i);
        const VertexPair sides[3] = {{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}};
        for (auto [a, b] : sides) {
            for (Vertex w : h.pair_neighborhood(a, b)) {
                if (e.contains(w)) continue;
                adjacent[i].push_back(static_cast<std::uint32_t>(*h.index_of(Edge3::make(a, b, w))));
            }
        }
        std::sort(adjacent[i].begin(), adjacent[i].end());
    }
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> step_cache;
    auto step_ok = [&](std::uint32_t a, std::uint32_t b) {
        if (!filters.step) return true;
        auto key = std::minmax(a, b);
        auto it = step_cache.find(key);
        if (it == step_cache.end()) it = step_cache.emplace(key, filters.step(h.edge(a), h.edge(b))).first;
        return it->second;
    };
    std::vector<std::uint32_t> path;
    std::vector<std::uint32_t> on_path(h.edge_count(), 0);
    std::map<Vertex, int> vertex_uses;
    std::size_t nodes = 0, target = 0;
    auto neighbor_of = [&](std::uint32_t a, std::uint32_t b) {
        return std::binary_search(adjacent[a].begin(), adjacent[a].end(), b);
    };
    auto extend = [&](auto&& self) -> bool {
        if (++nodes > node_budget) {
            out.exhausted = true;
            return true;
        }
        std::uint32_t last = path.back();
        for (std::uint32_t next : adjacent[last]) {
            if (next <= path.front() || on_path[next] || !step_ok(last, next)) continue;
            bool closes = path.size() + 1 == target;
            if (path.size() >= 2 && neighbor_of(next, path.front()) != closes) continue;
            if (closes && !step_ok(next, path.front())) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = neighbor_of(next, path[i]);
            if (chord) continue;
            std::size_t fresh = 0;
            for (Vertex v : h.edge(next).v) fresh += vertex_uses.count(v) ? 0 : 1;
            if (vertex_uses.size() + fresh > target) continue;  // r edges span r vertices
            path.push_back(next);
            on_path[next] = 1;
            for (Vertex v : h.edge(next).v) ++vertex_uses[v];
            bool stop = false;
            if (closes) {
                std::vector<Edge3> edges;
                for (std::uint32_t idx : path) edges.push_back(h.edge(idx));
                auto rec = recognize_topological_cycle(Hypergraph3(h.n_vertices(), std::move(edges)));
                if (rec.cert) offer(std::move(*rec.cert));
                stop = out.cycles.size() >= limit;
            } else {
                stop = self(self);
            }
            for (Vertex v : h.edge(next).v) {
                if (--vertex_uses[v] == 0) vertex_uses.erase(v);
            }
            on_path[next] = 0;
            path.pop_back();
            if (stop) return true;
        }
        return false;
    };
    for (target = 3; target <= max_len; ++target) {
        for (std::uint32_t s = 0; s < h.edge_count(); ++s) {
            path.assign(1, s);
            on_path[s] = 1;
            for (Vertex v : h.edge(s).v) ++vertex_uses[v];
            bool stop = extend(extend);
            on_path[s] = 0;
            vertex_uses.clear();
            if (stop) return out;
        }
    }
    return out;
}

std::string stage_name(TorusStage stage) {
    switch (stage) {
        case TorusStage::None: return "none";
        case TorusStage::SelectF: return "select_F";
        case TorusStage::Cycle: return "cycle";
        case TorusStage::Witness: return "witness";
        case TorusStage::Spheres: return "spheres";
        case TorusStage::Glue: return "glue";
        case TorusStage::Verify: return "verify";
    }
    return "unknown";
}

namespace {

struct Attempt {
    bool ok = false;
    TorusStage stage = TorusStage::Spheres;
    std::string diagnostics;
    Hypergraph3 surface;
};

// Steps 4-7 for one coloring of the vertices outside X.
Attempt try_coloring(const Hypergraph3& h, const TopCycleCert& cycle, const std::vector<Edge3>& witnesses,
                     const std::vector<char>& in_x, std::uint64_t key) {
    const std::size_t r = cycle.r();
    KeyedRng rng(key);
    std::vector<std::uint32_t> color(h.n_vertices(), ~std::uint32_t{0});
    for (Vertex v = 0; v < h.n_vertices(); ++v) {
        if (!in_x[v]) color[v] = static_cast<std::uint32_t>(rng.below(2 * r));
    }
    Attempt out;
    GlueSpec spec;
    spec.cycle = cycle;
    std::vector<char> allowed(h.n_vertices());
    for (std::size_t i = 0; i < r; ++i) {
        const Edge3& a = cycle.ordering[i];
        const Edge3& b = cycle.ordering[(i + 1) % r];
        const Edge3& f = witnesses[i];
        for (Vertex v = 0; v < h.n_vertices(); ++v) allowed[v] = color[v] == i;
        auto s1 = find_sphere_through(h, a, f, allowed);
        for (Vertex v = 0; v < h.n_vertices(); ++v) allowed[v] = color[v] == r + i;
        auto s2 = s1 ? find_sphere_through(h, b, f, allowed) : std::nullopt;
        if (!s1 || !s2) {
            out.diagnostics = "no half-sphere for pair " + std::to_string(i) + (s1 ? " (second)" : " (first)");
            return out;
        }
        std::vector<Edge3> merged;
        for (const Hypergraph3* s : {&*s1, &*s2})
            for (const Edge3& e : s->edges())
                if (e != f) merged.push_back(e);
        Hypergraph3 sphere = Hypergraph3::from_edge_set(h.n_vertices(), std::move(merged));
        SurfaceClass c = classify_surface(sphere);
        if (c.kind != SurfaceKind::OrientableGenus || c.param != 0) {
            out.diagnostics = "merged half-spheres for pair " + std::to_string(i) + " form " + surface_label(c);
            return out;
        }
        spec.spheres.push_back(std::move(sphere));
    }
    Hypergraph3 glued;
    try {
        glued = glue_spheres(spec);
    } catch (const Error& e) {
        out.stage = TorusStage::Glue;
        out.diagnostics = e.what();
        return out;
    }
    SurfaceClass c = classify_surface(glued);
    if (c.kind != SurfaceKind::OrientableGenus || c.param != 1) {
        out.stage = TorusStage::Verify;
        out.diagnostics = "glued complex classifies as " + surface_label(c);
        return out;
    }
    out.ok = true;
    out.stage = TorusStage::None;
    out.surface = std::move(glued);
    return out;
}

std::vector<Edge3> witness_pool(const Hypergraph3& h, const Edge3& a, const Edge3& b, const TorusOptions& options) {
    auto yz = shared_pair(a, b);
    std::vector<Edge3> pool;
    if (options.skip_F) {
        for (Vertex w : h.pair_neighborhood(yz[0], yz[1])) pool.push_back(Edge3::make(w, yz[0], yz[1]));
    } else {
        ProbMode mode = options.mode;
        mode.seed = options.seed;
        pool = pair_semi_admissible(h, a, b, options.params, mode).witnesses;
        std::sort(pool.begin(), pool.end());
    }
    return pool;
}

// k internally disjoint y-z routes in the colinks of (a \ f, w) and
// (b \ f, w), where f = w y z; a random color class then still tends to hold
// one route for each half-sphere.
bool routed(const Hypergraph3& h, const Edge3& a, const Edge3& b, Vertex w, const std::vector<char>* alive, int k) {
    auto yz = shared_pair(a, b);
    // degree of v in the colink of x and w, a cheap necessary condition
    auto colink_degree = [&](Vertex x, Vertex v) {
        auto p = h.pair_neighborhood(x, v), q = h.pair_neighborhood(w, v);
        std::size_t common = 0;
        for (std::size_t i = 0, j = 0; i < p.size() && j < q.size();) {
            if (p[i] == q[j]) ++common, ++i, ++j;
            else if (p[i] < q[j]) ++i;
            else ++j;
        }
        return common;
    };
    for (const Edge3* e : {&a, &b}) {
        Vertex x = e->other(yz[0], yz[1]);
        const std::size_t need = static_cast<std::size_t>(k);
        if (colink_degree(x, yz[0]) < need || colink_degree(x, yz[1]) < need) return false;
    }
    for (const Edge3* e : {&a, &b}) {
        SimpleGraph g = colink_graph(h, e->other(yz[0], yz[1]), w);
        if (menger_count(g, yz[0], yz[1], k, alive) < k) return false;
    }
    return true;
}

bool has_routed_witness(const Hypergraph3& h, const Edge3& a, const Edge3& b, const TorusOptions& options) {
    auto yz = shared_pair(a, b);
    for (const Edge3& f : witness_pool(h, a, b, options)) {
        Vertex w = f.other(yz[0], yz[1]);
        if (!a.contains(w) && !b.contains(w) && routed(h, a, b, w, nullptr, options.params.k)) return true;
    }
    return false;
}

// Step 3: one witness f_i = w y z per consecutive pair, with w off the cycle
// and distinct. Smallest qualifying witness first.
std::optional<std::vector<Edge3>> pick_witnesses(const Hypergraph3& h, const TopCycleCert& cycle,
                                                 const TorusOptions& options, std::string& why) {
    const std::size_t r = cycle.r();
    std::vector<char> in_x(h.n_vertices(), 0);
    for (const Edge3& e : cycle.ordering)
        for (Vertex v : e.v) in_x[v] = 1;
    std::vector<char> off_cycle(h.n_vertices());
    for (Vertex v = 0; v < h.n_vertices(); ++v) off_cycle[v] = !in_x[v];

    std::vector<Edge3> witnesses;
    for (std::size_t i = 0; i < r; ++i) {
        const Edge3& a = cycle.ordering[i];
        const Edge3& b = cycle.ordering[(i + 1) % r];
        auto yz = shared_pair(a, b);
        bool picked = false;
        for (const Edge3& f : witness_pool(h, a, b, options)) {
            Vertex w = f.other(yz[0], yz[1]);
            if (in_x[w] || !routed(h, a, b, w, &off_cycle, options.params.k)) continue;
            witnesses.push_back(f);
            in_x[w] = 1;
            picked = true;
            break;
        }
        if (!picked) {
            why = "no usable witness for pair " + std::to_string(i) + " of a length-" + std::to_string(r) + " cycle";
            return std::nullopt;
        }
    }
    return witnesses;
}

}  // namespace

TorusResult build_torus(const Hypergraph3& h, const TorusOptions& options) {
    TorusResult result;
    options.params.validate();
    if (options.max_cycle_len < 3) fail(ErrorCode::InvalidArgument, "max_cycle_len must be at least 3");
    if (options.retries == 0) fail(ErrorCode::InvalidArgument, "at least one retry is needed");

    Hypergraph3 f_edges = h;
    if (!options.skip_F) {
        ProbMode mode = options.mode;
        mode.seed = options.seed;
        mode.threads = options.threads;
        FSelection sel = select_semi_admissible_F(h, options.params, mode);
        f_edges = Hypergraph3(h.n_vertices(), sel.F);
    }
    result.f_size = f_edges.edge_count();
    if (f_edges.empty()) {
        result.stage = TorusStage::SelectF;
        result.diagnostics = "no edges survive the semi-admissible selection";
        return result;
    }

    // Cycles count as candidates only when every consecutive pair has a
    // witness that closes both half-spheres away from the cycle.
    std::vector<std::vector<Edge3>> witness_lists;
    std::size_t rejected = 0;
    std::string why;
    auto has_witnesses = [&](const TopCycleCert& cycle) {
        auto w = pick_witnesses(h, cycle, options, why);
        if (!w) {
            ++rejected;
            return false;
        }
        witness_lists.push_back(std::move(*w));
        return true;
    };
    CycleFilters filters;
    filters.accept = has_witnesses;
    filters.step = [&](const Edge3& a, const Edge3& b) { return has_routed_witness(h, a, b, options); };
    CycleCandidates candidates = find_torus_like_cycles(f_edges, options.max_cycle_len, options.seed,
                                                         options.max_candidates, 2'000'000, filters);
    if (candidates.cycles.empty()) {
        const std::string budget = candidates.exhausted ? " before the search budget ran out" : "";
        // With the pair filter on, tell "no cycle at all" from "no witnesses".
        if (rejected == 0 && !find_torus_like_cycles(f_edges, options.max_cycle_len, options.seed, 1).cycles.empty()) {
            why = "no consecutive pair of a short torus-like cycle has a witness with enough routes";
            rejected = 1;
        }
        if (rejected != 0) {
            result.stage = TorusStage::Witness;
            result.diagnostics = "torus-like cycles lack witnesses" + budget + "; last: " + why;
        } else {
            result.stage = TorusStage::Cycle;
            result.diagnostics =
                "no torus-like topological cycle of length <= " + std::to_string(options.max_cycle_len) + budget;
        }
        return result;
    }

    for (std::size_t ci = 0; ci < candidates.cycles.size(); ++ci) {
        const TopCycleCert& cycle = candidates.cycles[ci];
        ++result.candidates_tried;
        result.cycle = cycle;
        const std::vector<Edge3>& witnesses = witness_lists[ci];
        result.witnesses = witnesses;
        std::vector<char> in_x(h.n_vertices(), 0);
        for (const Edge3& e : cycle.ordering)
            for (Vertex v : e.v) in_x[v] = 1;
        for (const Edge3& f : witnesses)
            for (Vertex v : f.v) in_x[v] = 1;

        // Steps 4-7 with fresh colorings; the lowest successful retry wins.
        const std::size_t batch = std::max<std::size_t>(1, options.threads);
        for (std::size_t start = 0; start < options.retries; start += batch) {
            std::size_t count = std::min(batch, options.retries - start);
            std::vector<Attempt> attempts(count);
            detail::parallel_for(count, options.threads, [&](std::size_t j) {
                attempts[j] = try_coloring(h, cycle, witnesses, in_x,
                                           mix_key({options.seed, 0x70c0u, ci, start + j}));
            });
            for (std::size_t j = 0; j < count; ++j) {
                result.retries_used = start + j + 1;
                if (attempts[j].ok) {
                    result.ok = true;
                    result.stage = TorusStage::None;
                    result.diagnostics.clear();
                    result.surface = std::move(attempts[j].surface);
                    return result;
                }
                result.stage = attempts[j].stage;
                result.diagnostics = attempts[j].diagnostics;
            }
        }
    }
    return result;
}

namespace {

Hypergraph3 union_minus(const Hypergraph3& a, const Hypergraph3& b, const Edge3& e, std::size_t n) {
    std::vector<Edge3> edges;
    for (const Hypergraph3* s : {&a, &b})
        for (const Edge3& f : s->edges())
            if (f != e) edges.push_back(f);
    return Hypergraph3::from_edge_set(n, std::move(edges));
}

}  // namespace

GenusResult find_surface_genus_g(const Hypergraph3& h, int g, const GenusOptions& options) {
    if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be at least 1");
    GenusResult out;
    if (g == 1) {
        TorusResult t = build_torus(h, options.torus);
        out.ok = t.ok;
        out.stage = t.ok ? "" : stage_name(t.stage);
        out.diagnostics = t.diagnostics;
        out.surface = t.surface;
        out.from_coloring = t.ok;
        out.colorings_used = t.retries_used;
        return out;
    }
    const std::size_t v_piece = options.v_max != 0 ? options.v_max : std::max<std::size_t>(7, 4 * (g - 1) + 3);
    SurfaceSearch lower, torus;
    lower.target = SurfaceClass::orientable(g - 1);
    lower.v_max = v_piece;
    torus.target = SurfaceClass::orientable(1);
    torus.v_max = v_piece;
    auto has = [](const SurfaceSearch& s) {
        return [s](const Hypergraph3& sub, const Edge3& e) { return find_surface_through(sub, e, s).has_value(); };
    };
    FamilyOracle lower_oracle = has(lower), torus_oracle = has(torus);

    // Candidate shared edges: in both a genus g-1 surface and a torus of H,
    // rich ones first, then by the smaller of the two retention probabilities.
    struct Candidate {
        Edge3 e;
        bool rich;
        double score;
    };
    std::vector<Candidate> candidates;
    ProbMode mode;
    mode.method = ProbMethod::Auto;
    mode.trials = 256;
    mode.seed = options.seed;
    for (const Edge3& e : h.edges()) {
        if (!lower_oracle(h, e) || !torus_oracle(h, e)) continue;
        RichRecord a = rich_edge(h, e, lower_oracle, options.p, options.eps, mode);
        RichRecord b = g - 1 == 1 ? a : rich_edge(h, e, torus_oracle, options.p, options.eps, mode);
        candidates.push_back({e, a.rich && b.rich, std::min(a.prob, b.prob)});
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        if (x.rich != y.rich) return x.rich;
        return x.score > y.score;
    });
    if (options.max_edges != 0 && candidates.size() > options.max_edges) candidates.resize(options.max_edges);
    if (candidates.empty()) {
        out.stage = "rich";
        out.diagnostics = "no edge lies on both a genus " + std::to_string(g - 1) + " surface and a torus";
        return out;
    }

    auto accept = [&](const Hypergraph3& a, const Hypergraph3& b, const Edge3& e) {
        Hypergraph3 s = union_minus(a, b, e, h.n_vertices());
        SurfaceClass c = classify_surface(s);
        if (c.kind != SurfaceKind::OrientableGenus || c.param != g) return false;
        out.ok = true;
        out.stage.clear();
        out.diagnostics.clear();
        out.surface = std::move(s);
        out.shared_edge = e;
        return true;
    };

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const Edge3 e = candidates[ci].e;
        // Red copy of the genus g-1 family, blue torus, meeting in e only.
        for (std::size_t t = 0; t < options.retries; ++t) {
            KeyedRng rng{options.seed, 0x6e05u, ci, t};
            std::vector<char> red(h.n_vertices()), blue(h.n_vertices());
            for (Vertex v = 0; v < h.n_vertices(); ++v) {
                bool is_red = e.contains(v) || rng.bernoulli(0.5);
                red[v] = is_red;
                blue[v] = e.contains(v) || !is_red;
            }
            lower.allowed = red;
            torus.allowed = blue;
            auto a = find_surface_through(h, e, lower);
            auto b = a ? find_surface_through(h, e, torus) : std::nullopt;
            ++out.colorings_used;
            if (a && b && accept(*a, *b, e)) {
                out.from_coloring = true;
                return out;
            }
        }
        // Deterministic pairing: each torus through e against the complement.
        torus.allowed.clear();
        SurfaceSearch many = torus;
        many.max_results = 64;
        auto idx = h.index_of(e);
        for (const Hypergraph3& b : surfaces_through(h, *idx, many).surfaces) {
            std::vector<char> rest(h.n_vertices(), 1);
            for (Vertex v : b.non_isolated_vertices()) rest[v] = e.contains(v);
            lower.allowed = rest;
            auto a = find_surface_through(h, e, lower);
            if (a && accept(*a, b, e)) return out;
        }
        lower.allowed.clear();
    }
    out.stage = "coloring";
    out.diagnostics = "no pair of surfaces meeting in exactly one edge was found";
    return out;
}

}  // namespace surfex
