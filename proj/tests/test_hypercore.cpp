#include "doctest.h"
#include "fixtures.hpp"
#include "surfex/cycles.hpp"
#include "surfex/hypercore.hpp"

using namespace surfex;

static ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

TEST_CASE("parse reads edges and derives n from the largest id") {
    Hypergraph3 h = parse_hypergraph("0 1 2\n0 1 3\n");
    CHECK(h.n_vertices() == 4);
    REQUIRE(h.edge_count() == 2);
    CHECK(h.edge(0) == Edge3::make(0, 1, 2));
    CHECK(h.edge(1) == Edge3::make(0, 1, 3));

    Hypergraph3 empty = parse_hypergraph("");
    CHECK(empty.n_vertices() == 0);
    CHECK(empty.empty());
}

TEST_CASE("parse honors the #n header, comments and unsorted triples") {
    Hypergraph3 h = parse_hypergraph("#n 9\n# a comment\n 5 3  4 \r\n\n2 0 1");
    CHECK(h.n_vertices() == 9);
    CHECK(h.contains(Edge3::make(3, 4, 5)));
    CHECK(h.contains(Edge3::make(0, 1, 2)));
    CHECK(h.degree(8) == 0);
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { parse_hypergraph("0 0 1\n"); }) == ErrorCode::DegenerateEdge);
    CHECK(code_of([] { parse_hypergraph("0 1 x\n"); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { parse_hypergraph("0 1\n"); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { parse_hypergraph("0 1 -2\n"); }) == ErrorCode::MalformedLine);
    CHECK(code_of([] { parse_hypergraph("0 1 2\n2 1 0\n"); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { parse_hypergraph("#n 2\n0 1 2\n"); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("serialize then parse is the identity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 3 + rng() % 10;
        std::vector<Edge3> edges;
        for (int i = 0; i < 20; ++i) {
            Vertex a = rng() % n, b = rng() % n, c = rng() % n;
            if (a != b && b != c && a != c) edges.push_back(Edge3::make(a, b, c));
        }
        Hypergraph3 h = Hypergraph3::from_edge_set(n + rng() % 3, edges);
        CHECK(parse_hypergraph(serialize(h)) == h);
    }
    CHECK(serialize(parse_hypergraph("3 2 1\n0 1 2\n")) == "#n 4\n0 1 2\n1 2 3\n");
}

TEST_CASE("link graph") {
    SimpleGraph l = link_graph(fixtures::complete3(4), 0);
    CHECK(l.edge_count() == 3);
    CHECK(l.has_edge(1, 2));
    CHECK(l.has_edge(1, 3));
    CHECK(l.has_edge(2, 3));

    // apex 5 of the s=5 double pyramid sees the rim 0-1-2-3-4-0
    SimpleGraph rim = link_graph(double_pyramid(5), 5);
    CHECK(rim.edge_count() == 5);
    for (Vertex i = 0; i < 5; ++i) CHECK(rim.has_edge(i, (i + 1) % 5));

    Hypergraph3 h(6, {Edge3::make(0, 1, 2)});
    CHECK(link_graph(h, 5).edge_count() == 0);
    CHECK(code_of([&] { link_graph(h, 6); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("colink graph") {
    Hypergraph3 dp = double_pyramid(5);
    SimpleGraph g = colink_graph(dp, 5, 6);
    CHECK(g == link_graph(dp, 5));
    CHECK(colink_graph(dp, 6, 5) == g);

    Hypergraph3 k6 = fixtures::complete3(6);
    SimpleGraph c = colink_graph(k6, 0, 1);
    CHECK(c.edge_count() == 6);  // K4 on {2,3,4,5}
    CHECK(c.degree(0) == 0);

    Hypergraph3 h(5, {Edge3::make(0, 2, 3), Edge3::make(1, 3, 4)});
    CHECK(colink_graph(h, 0, 1).edge_count() == 0);
    CHECK(code_of([&] { colink_graph(h, 2, 2); }) == ErrorCode::SameVertex);
}

TEST_CASE("pair neighborhood") {
    Hypergraph3 h(5, {Edge3::make(0, 1, 2), Edge3::make(0, 1, 3), Edge3::make(0, 1, 4)});
    CHECK(pair_neighborhood(h, 0, 1) == std::vector<Vertex>{2, 3, 4});
    CHECK(pair_neighborhood(h, 2, 3).empty());
    CHECK(code_of([&] { pair_neighborhood(h, 1, 1); }) == ErrorCode::SameVertex);
    CHECK(pair_neighborhood(tight_cycle(5), 1, 2) == std::vector<Vertex>{0, 3});
}

TEST_CASE("neighboring edges") {
    CHECK(neighboring(Edge3::make(0, 1, 2), Edge3::make(0, 1, 3)));
    CHECK_FALSE(neighboring(Edge3::make(0, 1, 2), Edge3::make(0, 3, 4)));
    CHECK_FALSE(neighboring(Edge3::make(0, 1, 2), Edge3::make(0, 1, 2)));
}

TEST_CASE("link and neighborhood counting identities") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 4 + rng() % 8;
        std::vector<Edge3> edges;
        for (int i = 0; i < 25; ++i) {
            Vertex a = rng() % n, b = rng() % n, c = rng() % n;
            if (a != b && b != c && a != c) edges.push_back(Edge3::make(a, b, c));
        }
        Hypergraph3 h = Hypergraph3::from_edge_set(n, edges);
        std::size_t total = 0;
        for (Vertex y = 0; y < n; ++y) {
            CHECK(link_graph(h, y).edge_count() == h.degree(y));
            for (Vertex z = y + 1; z < n; ++z) {
                total += pair_neighborhood(h, y, z).size();
                CHECK(colink_graph(h, y, z) == colink_graph(h, z, y));
            }
        }
        CHECK(total == 3 * h.edge_count());
    }
}

TEST_CASE("compact_vertices and graph parsing") {
    Hypergraph3 h(10, {Edge3::make(2, 5, 9)});
    std::vector<Vertex> mapping;
    Hypergraph3 c = compact_vertices(h, &mapping);
    CHECK(c.n_vertices() == 3);
    CHECK(mapping == std::vector<Vertex>{2, 5, 9});
    CHECK(c.contains(Edge3::make(0, 1, 2)));

    SimpleGraph g = parse_graph("0 1\n2 1\n");
    CHECK(g.n_vertices() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK(code_of([] { parse_graph("1 1\n"); }) == ErrorCode::SelfLoop);
    CHECK(parse_graph(serialize(g)) == g);
}
