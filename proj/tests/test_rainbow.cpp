#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "surfex/error.hpp"
#include "surfex/rainbow.hpp"

using namespace surfex;

namespace {

// Every map of the cycle's vertices into G, checked edge by edge.
std::uint64_t brute_hom_cycle(const SimpleGraph& g, std::size_t len, std::uint64_t* nonrainbow = nullptr,
                              const SetColoring* c = nullptr) {
    const std::size_t n = g.n_vertices();
    std::vector<Vertex> phi(len, 0);
    std::uint64_t count = 0, bad = 0;
    if (n == 0) return 0;
    for (;;) {
        bool hom = true;
        for (std::size_t i = 0; i < len && hom; ++i) hom = g.has_edge(phi[i], phi[(i + 1) % len]);
        if (len == 2) hom = g.has_edge(phi[0], phi[1]);
        if (hom) {
            ++count;
            if (c) {
                bool rainbow = true;
                for (std::size_t i = 0; i < len && rainbow; ++i)
                    for (std::size_t j = i + 1; j < len && rainbow; ++j) {
                        std::set<std::uint32_t> a(c->colors[phi[i]].begin(), c->colors[phi[i]].end());
                        for (auto col : c->colors[phi[j]]) rainbow = rainbow && !a.count(col);
                    }
                if (!rainbow) ++bad;
            }
        }
        std::size_t k = 0;
        while (k < len && ++phi[k] == n) phi[k++] = 0;
        if (k == len) break;
    }
    if (nonrainbow) *nonrainbow = bad;
    return count;
}

std::vector<std::vector<int>> all_distances(const SimpleGraph& g) {
    const std::size_t n = g.n_vertices();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (Vertex s = 0; s < n; ++s) {
        std::vector<Vertex> queue{s};
        d[s][s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : g.neighbors(queue[i]))
                if (d[s][w] < 0) {
                    d[s][w] = d[s][queue[i]] + 1;
                    queue.push_back(w);
                }
    }
    return d;
}

bool brute_diverse(const SimpleGraph& g, const SetColoring& c) {
    auto d = all_distances(g);
    for (Vertex v = 0; v < g.n_vertices(); ++v)
        for (Vertex w = v + 1; w < g.n_vertices(); ++w)
            if (d[v][w] > 0 && d[v][w] <= 2 && !c.disjoint(v, w)) return false;
    return true;
}

// Random coloring from a small palette, so collisions are common.
SetColoring random_coloring(std::size_t n, int r, std::uint32_t palette, std::mt19937_64& rng) {
    SetColoring c;
    c.r = r;
    for (std::size_t v = 0; v < n; ++v) {
        std::set<std::uint32_t> s;
        while (s.size() < static_cast<std::size_t>(r)) s.insert(static_cast<std::uint32_t>(rng() % palette));
        c.colors.emplace_back(s.begin(), s.end());
    }
    return c;
}

// Greedy diverse coloring: each vertex avoids colors within distance 2.
SetColoring greedy_diverse_coloring(const SimpleGraph& g, int r, std::mt19937_64& rng) {
    auto d = all_distances(g);
    SetColoring c;
    c.r = r;
    c.colors.resize(g.n_vertices());
    for (Vertex v = 0; v < g.n_vertices(); ++v) {
        std::set<std::uint32_t> banned;
        for (Vertex w = 0; w < v; ++w)
            if (d[v][w] > 0 && d[v][w] <= 2) banned.insert(c.colors[w].begin(), c.colors[w].end());
        std::set<std::uint32_t> pick;
        while (pick.size() < static_cast<std::size_t>(r)) {
            auto col = static_cast<std::uint32_t>(rng() % (3 * r * g.n_vertices() + 1));
            if (!banned.count(col)) pick.insert(col);
        }
        c.colors[v].assign(pick.begin(), pick.end());
    }
    return c;
}

// Existence of a rainbow cycle of length <= max_len by trying vertex subsets
// and every cyclic order of each subset.
bool brute_has_rainbow_cycle(const SimpleGraph& g, const SetColoring& c, std::size_t max_len) {
    const std::size_t n = g.n_vertices();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(std::popcount(mask));
        if (size < 3 || size > max_len) continue;
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        bool rainbow = true;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) rainbow = rainbow && c.disjoint(vs[i], vs[j]);
        if (!rainbow) continue;
        do {
            bool cyc = true;
            for (std::size_t i = 0; i < vs.size() && cyc; ++i) cyc = g.has_edge(vs[i], vs[(i + 1) % vs.size()]);
            if (cyc) return true;
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
    }
    return false;
}

// Vertices of e ordered by id mod 3.
std::array<Vertex, 3> by_residue(const Edge3& e) {
    std::array<Vertex, 3> x{};
    for (Vertex v : e.v) x[v % 3] = v;
    return x;
}

PartiteWitness mod3_parts(std::size_t n) {
    PartiteWitness p;
    for (std::size_t v = 0; v < n; ++v) p.part.push_back(static_cast<std::uint8_t>(v % 3));
    return p;
}

Hypergraph3 random_partite(std::size_t n, double q, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(q);
    std::vector<Edge3> edges;
    for (Vertex a = 0; a < n; a += 3)
        for (Vertex b = 1; b < n; b += 3)
            for (Vertex c = 2; c < n; c += 3)
                if (coin(rng)) edges.push_back(Edge3::make(a, b, c));
    return Hypergraph3(n, edges);
}

std::size_t count_direction_changes(const std::vector<bool>& forward) {
    std::size_t changes = 0;
    for (std::size_t i = 0; i < forward.size(); ++i) changes += forward[i] != forward[(i + 1) % forward.size()];
    return changes;
}

std::vector<Vertex> l_vertices(const LinkOfEdgesGraph& l, const std::vector<Edge3>& f) {
    std::vector<Vertex> out;
    for (const Edge3& e : f) {
        auto it = std::find(l.payload.begin(), l.payload.end(), e);
        REQUIRE(it != l.payload.end());
        out.push_back(static_cast<Vertex>(it - l.payload.begin()));
    }
    return out;
}

}  // namespace

TEST_CASE("three_partition keeps only transversal edges and is deterministic") {
    Hypergraph3 h = fixtures::complete3(9);
    auto a = three_partition(h, 11);
    auto b = three_partition(h, 11);
    CHECK(a.sub == b.sub);
    CHECK(a.parts.part == b.parts.part);
    CHECK(is_three_partite(a.sub, a.parts));
    CHECK(is_subhypergraph(a.sub, h));
    CHECK(9.0 * static_cast<double>(a.sub.edge_count()) >= 2.0 * static_cast<double>(h.edge_count()));

    Hypergraph3 single(3, {Edge3::make(0, 1, 2)});
    CHECK(three_partition(single, 5).sub.edge_count() == 1);
}

TEST_CASE("edge arrow follows the interpolating edges") {
    // x = (0, 1, 2), y = (3, 4, 5) with parts 0,1,2 by id mod 3.
    Hypergraph3 h(6, {Edge3::make(0, 1, 2), Edge3::make(3, 4, 5), Edge3::make(0, 4, 5), Edge3::make(0, 1, 5)});
    auto parts = mod3_parts(6);
    CHECK(edge_arrow(h, parts, Edge3::make(0, 1, 2), Edge3::make(3, 4, 5)));
    CHECK_FALSE(edge_arrow(h, parts, Edge3::make(3, 4, 5), Edge3::make(0, 1, 2)));
    auto l = build_link_of_edges(h, parts);
    REQUIRE(l.graph.edge_count() == 1);
    auto v = l_vertices(l, {Edge3::make(0, 1, 2), Edge3::make(3, 4, 5)});
    CHECK(l.arrow(v[0], v[1]));
    CHECK_FALSE(l.arrow(v[1], v[0]));

    Hypergraph3 star(5, {Edge3::make(0, 1, 2), Edge3::make(0, 4, 2)});
    CHECK(build_link_of_edges(star, mod3_parts(5)).graph.edge_count() == 0);

    PartiteWitness bad;
    bad.part = {0, 0, 1, 2, 2, 2};
    CHECK_THROWS_AS(build_link_of_edges(h, bad), Error);
}

TEST_CASE("L(H) matches the arrow definition on random 3-partite hypergraphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Hypergraph3 h = random_partite(12, 0.4, rng);
        auto parts = mod3_parts(12);
        auto l = build_link_of_edges(h, parts);
        std::size_t count = 0;
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            for (std::size_t j = 0; j < h.edge_count(); ++j) {
                if (i == j) continue;
                auto e = by_residue(h.edge(i)), f = by_residue(h.edge(j));
                bool disjoint = intersection_size(h.edge(i), h.edge(j)) == 0;
                bool arrow = disjoint && h.contains(Edge3::make(e[0], f[1], f[2])) &&
                             h.contains(Edge3::make(e[0], e[1], f[2]));
                CHECK(l.arrow(static_cast<Vertex>(i), static_cast<Vertex>(j)) == arrow);
                if (i < j && (arrow || (disjoint && h.contains(Edge3::make(f[0], e[1], e[2])) &&
                                        h.contains(Edge3::make(f[0], f[1], e[2]))))) {
                    ++count;
                }
            }
        }
        CHECK(l.graph.edge_count() == count);
    }
}

TEST_CASE("diversity checker agrees with the distance definition") {
    std::mt19937_64 rng(5);
    SimpleGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    SetColoring c;
    c.r = 1;
    c.colors = {{7}, {1}, {2}, {7}};
    CHECK(is_diverse(path, c).diverse);  // distance 3
    c.colors = {{7}, {1}, {7}, {3}};
    auto bad = is_diverse(path, c);
    CHECK_FALSE(bad.diverse);
    CHECK(bad.violation == VertexPair{0, 2});
    c.colors = {{1}, {1}, {2}, {3}};
    CHECK_FALSE(is_diverse(path, c).diverse);

    for (int trial = 0; trial < 300; ++trial) {
        auto g = fixtures::random_graph(7, 0.3, rng);
        auto col = random_coloring(7, 2, 14, rng);
        CHECK(is_diverse(g, col).diverse == brute_diverse(g, col));
    }
    c.colors.pop_back();
    CHECK_THROWS_AS(is_diverse(path, c), Error);
}

TEST_CASE("closed walk counts") {
    std::mt19937_64 rng(7);
    CHECK(hom_cycle(fixtures::complete_graph(3), 4) == brute_hom_cycle(fixtures::complete_graph(3), 4));
    CHECK(hom_cycle(fixtures::complete_graph(3), 4) == 18);
    CHECK(hom_cycle(SimpleGraph(5, {}), 4) == 0);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = fixtures::random_graph(6, 0.5, rng);
        CHECK(hom_cycle(g, 2) == 2 * g.edge_count());
        for (std::size_t len : {4, 6}) CHECK(hom_cycle(g, len, 2) == brute_hom_cycle(g, len));
        // Splitting a closed walk at its midpoint.
        for (std::size_t l = 1; l <= 3; ++l) {
            std::uint64_t sum = 0;
            for (Vertex y = 0; y < 6; ++y)
                for (Vertex z = 0; z < 6; ++z) {
                    auto w = hom_path_endpoints(g, y, z, l);
                    sum += w * w;
                }
            CHECK(sum == hom_cycle(g, 2 * l));
        }
    }
    auto k3 = fixtures::complete_graph(3);
    CHECK(hom_path_endpoints(k3, 0, 1, 1) == 1);
    CHECK(hom_path_endpoints(k3, 0, 1, 2) == 1);
    CHECK(hom_path_endpoints(SimpleGraph(3, {{0, 1}}), 0, 2, 1) == 0);
    CHECK_THROWS_AS(hom_cycle(k3, 3), Error);

    // K_200 has 199^40-ish closed walks of length 40.
    try {
        hom_cycle(fixtures::complete_graph(200), 40);
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
}

TEST_CASE("Sidorenko inequality on random graphs") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = fixtures::random_graph(3 + trial % 10, 0.1 + 0.008 * trial, rng);
        for (std::size_t k = 1; k <= 3; ++k) {
            auto s = sidorenko_check(g, k);
            CHECK(s.holds);
            CHECK(s.exact);
        }
    }
    auto empty = sidorenko_check(SimpleGraph(4, {}), 2);
    CHECK(empty.holds);
    CHECK(empty.hom == 0);
    // K4: hom(C2) = 12 against the lower bound 12^2 / 4^2.
    auto k4 = sidorenko_check(fixtures::complete_graph(4), 1);
    CHECK(k4.hom == 12);
    CHECK(k4.lower == doctest::Approx(9.0));
}

TEST_CASE("non-rainbow closed walks against exhaustive maps") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = fixtures::random_graph(6, 0.45, rng);
        int r = 1 + trial % 3;
        auto c = greedy_diverse_coloring(g, r, rng);
        REQUIRE(brute_diverse(g, c));
        for (std::size_t len : {4, 6}) {
            std::uint64_t bad = 0;
            auto total = brute_hom_cycle(g, len, &bad, &c);
            auto res = count_nonrainbow_homs(g, c, len);
            CHECK(res.total == total);
            CHECK(res.count == bad);
            CHECK(res.holds);
        }
    }
    // Distinct colors everywhere: only walks repeating a vertex are non-rainbow.
    auto k4 = fixtures::complete_graph(4);
    SetColoring c{1, {{0}, {1}, {2}, {3}}};
    auto res = count_nonrainbow_homs(k4, c, 4);
    CHECK(res.count == res.total - 4 * 3 * 2 * 1);
    auto empty = count_nonrainbow_homs(SimpleGraph(3, {}), SetColoring{1, {{0}, {1}, {2}}}, 4);
    CHECK(empty.count == 0);
    CHECK(empty.bound == 0.0);

    SetColoring clash{1, {{0}, {0}, {2}, {3}}};
    CHECK_THROWS_AS(count_nonrainbow_homs(k4, clash, 4), Error);
    CHECK_THROWS_AS(count_nonrainbow_homs(k4, c, 4, 10), Error);
}

TEST_CASE("rainbow cycle search") {
    SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    SetColoring distinct{1, {{0}, {1}, {2}, {3}}};
    auto found = find_rainbow_cycle(c4, distinct, 4);
    REQUIRE(found);
    CHECK(found->size() == 4);
    CHECK_FALSE(find_rainbow_cycle(c4, distinct, 3));
    SetColoring clash{1, {{0}, {1}, {0}, {3}}};
    CHECK_FALSE(find_rainbow_cycle(c4, clash, 8));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = fixtures::random_graph(7, 0.4, rng);
        auto c = random_coloring(7, 1, 6, rng);
        for (std::size_t max_len : {3, 4, 5, 7}) {
            auto cyc = find_rainbow_cycle(g, c, max_len);
            CHECK(cyc.has_value() == brute_has_rainbow_cycle(g, c, max_len));
            if (cyc) {
                CHECK(cyc->size() <= max_len);
                for (std::size_t i = 0; i < cyc->size(); ++i) {
                    CHECK(g.has_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
                    for (std::size_t j = i + 1; j < cyc->size(); ++j) CHECK(c.disjoint((*cyc)[i], (*cyc)[j]));
                }
            }
        }
        // A tree has no cycles at all.
        std::vector<VertexPair> tree;
        for (Vertex v = 1; v < 7; ++v) tree.emplace_back(static_cast<Vertex>(rng() % v), v);
        CHECK_FALSE(find_rainbow_cycle(SimpleGraph(7, tree), c, 7));
    }
}

TEST_CASE("balanced subhypergraph") {
    // Complete 3-partite on 3 x 3: every co-degree is 3.
    std::mt19937_64 seeded(1);
    Hypergraph3 full = random_partite(9, 1.0, seeded);
    REQUIRE(full.edge_count() == 27);
    auto res = balanced_subhypergraph(full, mod3_parts(9));
    CHECK(res.sub == full);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(res.t[i] == 3);
        CHECK(res.max_degree[i] == 3);
    }

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Hypergraph3 h = random_partite(15, 0.15 + 0.02 * trial, rng);
        if (h.empty()) continue;
        auto b = balanced_subhypergraph(h, mod3_parts(15));
        CHECK(is_subhypergraph(b.sub, h));
        CHECK(b.retention_holds);
        CHECK(b.window_holds);
        CHECK(b.log_n == 4);
        // Recount co-degrees of the output and compare with the reported window.
        for (int side = 0; side < 3; ++side) {
            std::map<std::pair<Vertex, Vertex>, std::size_t> deg;
            for (const Edge3& e : b.sub.edges()) {
                std::vector<Vertex> rest;
                for (Vertex v : e.v)
                    if (static_cast<int>(v % 3) != side) rest.push_back(v);
                ++deg[{rest[0], rest[1]}];
            }
            for (auto [x, d] : deg) {
                CHECK(d >= b.t[static_cast<std::size_t>(side)]);
                CHECK(d <= b.max_degree[static_cast<std::size_t>(side)]);
                CHECK(static_cast<double>(d) >= b.threshold[static_cast<std::size_t>(side)]);
            }
        }
    }

    // A dense block plus a sparse tail: the tail's low co-degrees are dropped.
    std::vector<Edge3> edges;
    for (Vertex a = 0; a < 12; a += 3)
        for (Vertex b = 1; b < 12; b += 3)
            for (Vertex c = 2; c < 12; c += 3) edges.push_back(Edge3::make(a, b, c));
    edges.push_back(Edge3::make(12, 13, 14));
    edges.push_back(Edge3::make(15, 16, 17));
    Hypergraph3 planted(18, edges);
    auto p = balanced_subhypergraph(planted, mod3_parts(18));
    CHECK(p.sub.edge_count() == 64);
    CHECK_FALSE(p.sub.contains(Edge3::make(12, 13, 14)));

    CHECK_THROWS_AS(balanced_subhypergraph(Hypergraph3(6, {}), mod3_parts(6)), Error);
    CHECK_THROWS_AS(balanced_subhypergraph(Hypergraph3(3, {Edge3::make(0, 1, 2)}), PartiteWitness{{0, 0, 1}}),
                    Error);
}

TEST_CASE("diverse subgraph of L") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Hypergraph3 h = random_partite(12, 0.5, rng);
        auto l = build_link_of_edges(h, mod3_parts(12));
        auto d = diverse_subgraph(l);
        auto coloring = d.natural_coloring();
        CHECK(brute_diverse(d.graph, coloring));
        std::set<VertexPair> kept(d.graph.edges().begin(), d.graph.edges().end());
        for (std::size_t i = 0; i < l.graph.edge_count(); ++i) {
            auto [u, v] = l.graph.edges()[i];
            if (kept.count({u, v})) {
                CHECK(d.arrow(u, v) == l.arrow(u, v));
                CHECK(d.arrow(v, u) == l.arrow(v, u));
                continue;
            }
            // Maximality: adding a dropped edge breaks diversity.
            std::vector<VertexPair> more(kept.begin(), kept.end());
            more.emplace_back(u, v);
            CHECK_FALSE(brute_diverse(SimpleGraph(l.graph.n_vertices(), more), coloring));
        }
    }
    // Payloads of a star's leaves all share vertex 0.
    LinkOfEdgesGraph star;
    star.payload = {Edge3::make(1, 2, 3), Edge3::make(0, 4, 5), Edge3::make(0, 7, 8), Edge3::make(0, 10, 11)};
    star.graph = SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}});
    star.direction = {1, 1, 1};
    CHECK(diverse_subgraph(star).graph.edge_count() == 1);
}

TEST_CASE("rainbow to topological cycle on the mixed four-cycle") {
    // f1 -> f2 -> f3 <- f4 <- f1
    auto inst = fixtures::planted_rainbow({true, true, false, false});
    CHECK(inst.h.n_vertices() == 12);
    auto l = build_link_of_edges(inst.h, inst.parts);
    auto cyc = l_vertices(l, inst.f);
    for (std::size_t i = 0; i < 4; ++i) CHECK(l.graph.has_edge(cyc[i], cyc[(i + 1) % 4]));
    auto found = find_rainbow_cycle(l.graph, l.natural_coloring(), 4);
    REQUIRE(found);
    CHECK(found->size() == 4);

    auto conv = rainbow_to_topcycle(inst.h, inst.parts, l, cyc);
    CHECK(conv.removed == 2);
    CHECK(conv.cert.r() == 10);
    CHECK(conv.cert.torus_like);
    CHECK(is_subhypergraph(conv.cycle, inst.h));
    CHECK(recognize_topological_cycle(conv.cycle).cert.has_value());
    CHECK(check_3partite_torus_like(conv.cycle, inst.parts));
}

TEST_CASE("rainbow conversion over orientation patterns") {
    for (std::size_t m : {4, 6, 8}) {
        std::vector<bool> all_forward(m, true), alternating(m);
        for (std::size_t i = 0; i < m; ++i) alternating[i] = i % 2 == 0;
        auto fw = fixtures::planted_rainbow(all_forward);
        auto lf = build_link_of_edges(fw.h, fw.parts);
        auto conv = rainbow_to_topcycle(fw.h, fw.parts, lf, l_vertices(lf, fw.f));
        CHECK(conv.removed == 0);
        CHECK(conv.cert.r() == 3 * m);

        auto alt = fixtures::planted_rainbow(alternating);
        auto la = build_link_of_edges(alt.h, alt.parts);
        auto conv2 = rainbow_to_topcycle(alt.h, alt.parts, la, l_vertices(la, alt.f));
        CHECK(conv2.removed == m);
        CHECK(conv2.cert.r() == 2 * m);
        CHECK(conv2.cert.torus_like);
    }

    std::mt19937_64 rng(29);
    for (std::size_t m : {3, 4, 5, 6}) {
        for (std::uint32_t pattern = 0; pattern < (1u << m); ++pattern) {
            std::vector<bool> forward(m);
            for (std::size_t i = 0; i < m; ++i) forward[i] = pattern >> i & 1;
            auto inst = fixtures::planted_rainbow(forward, &rng, 4);
            auto l = build_link_of_edges(inst.h, inst.parts);
            auto conv = rainbow_to_topcycle(inst.h, inst.parts, l, l_vertices(l, inst.f));
            CHECK(conv.cert.torus_like);
            CHECK(conv.cert.r() <= 3 * m);
            CHECK(is_subhypergraph(conv.cycle, inst.h));
            CHECK(conv.removed == count_direction_changes(forward));
            CHECK(recognize_topological_cycle(conv.cycle).cert.has_value());
            // Whatever rainbow cycle the search finds also converts.
            auto any = find_rainbow_cycle(l.graph, l.natural_coloring(), 2 * m);
            REQUIRE(any);
            auto conv3 = rainbow_to_topcycle(inst.h, inst.parts, l, *any);
            CHECK(conv3.cert.torus_like);
            CHECK(conv3.cert.r() <= 3 * any->size());
        }
    }
}

TEST_CASE("rainbow conversion rejects bad input") {
    auto inst = fixtures::planted_rainbow({true, true, true, true});
    auto l = build_link_of_edges(inst.h, inst.parts);
    auto cyc = l_vertices(l, inst.f);
    std::vector<Vertex> wrong = {cyc[0], cyc[2], cyc[1], cyc[3]};
    CHECK_THROWS_AS(rainbow_to_topcycle(inst.h, inst.parts, l, wrong), Error);
    CHECK_THROWS_AS(rainbow_to_topcycle(inst.h, inst.parts, l, {cyc[0], cyc[1]}), Error);

    // Same L, but the hypergraph lost an interpolating edge.
    std::vector<Edge3> fewer(inst.h.edges().begin() + 1, inst.h.edges().end());
    Hypergraph3 broken(inst.h.n_vertices(), fewer);
    bool interpolant_gone = std::find(inst.f.begin(), inst.f.end(), inst.h.edge(0)) == inst.f.end();
    if (interpolant_gone) {
        try {
            rainbow_to_topcycle(broken, inst.parts, l, cyc);
            FAIL("expected MissingInterpolant");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::MissingInterpolant);
        }
    }
}
