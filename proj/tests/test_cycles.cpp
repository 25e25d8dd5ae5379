#include "doctest.h"
#include "fixtures.hpp"
#include "surfex/cycles.hpp"
#include "surfex/surface.hpp"

using namespace surfex;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

int sign_product(const TopCycleCert& c) {
    int p = 1;
    for (int e : c.epsilons) p *= e;
    return p;
}

// One fresh rim vertex per consecutive pair, numbered after the cycle.
GlueSpec glue_ready(const TopCycleCert& cert, std::size_t first_free, std::size_t path_len = 1) {
    GlueSpec spec;
    spec.cycle = cert;
    const std::size_t r = cert.r();
    const std::size_t n = first_free + r * path_len;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Vertex> path;
        for (std::size_t j = 0; j < path_len; ++j) path.push_back(static_cast<Vertex>(first_free + i * path_len + j));
        spec.spheres.push_back(pair_sphere(cert.ordering[i], cert.ordering[(i + 1) % r], path, n));
    }
    return spec;
}

// Tight 5-cycle with the side {4,1} of face {4,0,1} split by a new vertex 5.
Hypergraph3 klein_like_cycle() {
    return Hypergraph3(6, {Edge3::make(0, 1, 2), Edge3::make(1, 2, 3), Edge3::make(2, 3, 4), Edge3::make(3, 4, 0),
                           Edge3::make(4, 5, 0), Edge3::make(5, 0, 1)});
}

}  // namespace

TEST_CASE("tight cycle construction") {
    CHECK(code_of([] { tight_cycle(3); }) == ErrorCode::TooShort);
    CHECK(code_of([] { tight_cycle(4); }) == ErrorCode::TooShort);
    Hypergraph3 forced = tight_cycle(4, true);
    CHECK(forced == fixtures::complete3(4));
    CHECK(classify_surface(forced).kind == SurfaceKind::OrientableGenus);

    Hypergraph3 t6 = tight_cycle(6);
    CHECK(t6.edge_count() == 6);
    CHECK(t6.contains(Edge3::make(5, 0, 1)));
    TopCycleCert c6 = require_topological_cycle(t6);
    CHECK(c6.kind == CycleKind::Cylinder);
    CHECK(require_topological_cycle(tight_cycle(7)).kind == CycleKind::Moebius);
}

TEST_CASE("tight cycles are torus-like") {
    for (std::size_t r = 5; r <= 16; ++r) {
        TopCycleCert c = require_topological_cycle(tight_cycle(r));
        CHECK(c.r() == r);
        CHECK(c.torus_like);
        CHECK(is_torus_like(c));
        CHECK(c.kind == (r % 2 == 0 ? CycleKind::Cylinder : CycleKind::Moebius));
        for (int e : c.epsilons) CHECK(e == -1);
    }
}

TEST_CASE("certificate structure") {
    TopCycleCert c = require_topological_cycle(tight_cycle(9));
    for (std::size_t i = 0; i < c.r(); ++i) {
        CHECK(neighboring(c.ordering[i], c.ordering[(i + 1) % c.r()]));
        CHECK(c.ordering[i].contains(c.boundary[i].first));
        CHECK(c.ordering[i].contains(c.boundary[i].second));
    }
    CHECK((sign_product(c) == (c.r() % 2 == 0 ? 1 : -1)) == c.torus_like);
}

TEST_CASE("non-cycles are rejected with a reason") {
    TopCycleResult o = recognize_topological_cycle(double_pyramid(4));
    CHECK_FALSE(o.cert);
    CHECK(o.defect != TopCycleDefect::None);
    CHECK(code_of([] { require_topological_cycle(double_pyramid(4)); }) == ErrorCode::NotATopCycle);

    // two disjoint tight cycles: 12 edges on 12 vertices but two neighbor cycles
    Hypergraph3 two = union_of({tight_cycle(6), fixtures::shifted(tight_cycle(6), 6, 12)});
    CHECK(recognize_topological_cycle(two).defect == TopCycleDefect::NotACycle);

    CHECK(recognize_topological_cycle(Hypergraph3(3, {Edge3::make(0, 1, 2)})).defect == TopCycleDefect::SizeMismatch);
}

TEST_CASE("double pyramid") {
    CHECK(code_of([] { double_pyramid(2); }) == ErrorCode::TooShort);
    SkeletonCounts c3 = skeleton_counts(double_pyramid(3));
    CHECK(c3.v == 5);
    CHECK(c3.e == 9);
    CHECK(c3.f == 6);
    for (std::size_t s : {3, 4, 10}) {
        Hypergraph3 dp = double_pyramid(s);
        CHECK(dp.n_vertices() == s + 2);
        CHECK(dp.edge_count() == 2 * s);
        SurfaceClass c = classify_surface(dp);
        CHECK(c.kind == SurfaceKind::OrientableGenus);
        CHECK(c.param == 0);
    }
    CHECK(skeleton_counts(double_pyramid(10)).f == 20);
}

TEST_CASE("topological cycles inside double pyramids") {
    PyramidCycle a = pyramid_topcycle(5, 3);
    CHECK(a.cert.r() == 7);
    CHECK(a.cycle.edge_count() == 7);
    CHECK(recognize_topological_cycle(a.cycle).cert);
    CHECK(is_subhypergraph(a.cycle, double_pyramid(5)));

    PyramidCycle b = pyramid_topcycle(4, 3);
    CHECK(b.cert.r() == 6);
    CHECK(recognize_topological_cycle(b.cycle).cert);

    CHECK(code_of([] { pyramid_topcycle(4, 4); }) == ErrorCode::RangeViolation);
    CHECK(code_of([] { pyramid_topcycle(3, 3); }) == ErrorCode::RangeViolation);

    for (std::size_t s = 4; s <= 9; ++s) {
        for (std::size_t r = 3; r < s; ++r) {
            PyramidCycle p = pyramid_topcycle(s, r);
            CHECK(p.cert.r() == s + 2);
            CHECK(p.cert.ordering.front() == Edge3::make(s, 0, 1));
            CHECK((sign_product(p.cert) == (p.cert.r() % 2 == 0 ? 1 : -1)) == p.cert.torus_like);
        }
    }
}

TEST_CASE("a Klein-bottle-like cycle exists at r = 6") {
    TopCycleCert c = require_topological_cycle(klein_like_cycle());
    CHECK(c.r() == 6);
    CHECK(c.kind == CycleKind::Moebius);
    CHECK_FALSE(c.torus_like);
    CHECK(sign_product(c) == -1);

    Hypergraph3 t = glue_spheres(glue_ready(c, 6));
    SurfaceClass k = classify_surface(t);
    CHECK(k.kind == SurfaceKind::NonOrientableCrossCaps);
    CHECK(k.param == 2);
}

TEST_CASE("3-partite topological cycles") {
    PartiteWitness mod3;
    for (int i = 0; i < 9; ++i) mod3.part.push_back(static_cast<std::uint8_t>(i % 3));
    CHECK(check_3partite_torus_like(tight_cycle(6), mod3));
    CHECK(check_3partite_torus_like(tight_cycle(9), mod3));
    CHECK(code_of([&] { check_3partite_torus_like(tight_cycle(7), mod3); }) == ErrorCode::NotThreePartite);

    PartiteWitness bad = mod3;
    CHECK(code_of([&] { check_3partite_torus_like(fixtures::complete3(3), bad); }) == ErrorCode::NotATopCycle);
}

TEST_CASE("gluing spheres along tight cycles gives a torus") {
    for (std::size_t r : {6, 7, 24}) {
        TopCycleCert c = require_topological_cycle(tight_cycle(r));
        for (std::size_t path_len : {1, 3}) {
            Hypergraph3 t = glue_spheres(glue_ready(c, r, path_len));
            SurfaceClass k = classify_surface(t);
            CHECK(k.kind == SurfaceKind::OrientableGenus);
            CHECK(k.param == 1);
            CHECK(euler_characteristic(t) == 0);
        }
    }
}

TEST_CASE("gluing validates its preconditions") {
    TopCycleCert c = require_topological_cycle(tight_cycle(6));
    GlueSpec spec = glue_ready(c, 6);

    GlueSpec overlap = spec;
    overlap.spheres[1] = pair_sphere(c.ordering[1], c.ordering[2], {6}, 12);  // reuses sphere 0's rim vertex
    CHECK(code_of([&] { glue_spheres(overlap); }) == ErrorCode::DisjointnessViolation);

    GlueSpec on_cycle = spec;
    on_cycle.spheres[0] = pair_sphere(c.ordering[0], c.ordering[1], {4}, 12);
    CHECK(code_of([&] { glue_spheres(on_cycle); }) == ErrorCode::DisjointnessViolation);

    GlueSpec missing = spec;
    missing.spheres[2] = spec.spheres[3];
    CHECK(code_of([&] { glue_spheres(missing); }) == ErrorCode::SphereMissingEdge);

    GlueSpec flat = spec;
    flat.spheres[0] = tight_cycle(6);
    CHECK(code_of([&] { glue_spheres(flat); }) == ErrorCode::NotASphere);
}

TEST_CASE("recognition ignores relabeling") {
    std::mt19937_64 rng(5);
    std::vector<Hypergraph3> cases{tight_cycle(8), tight_cycle(11), klein_like_cycle(), pyramid_topcycle(6, 4).cycle};
    for (const auto& h : cases) {
        TopCycleCert base = require_topological_cycle(h);
        for (int i = 0; i < 20; ++i) {
            TopCycleCert c = require_topological_cycle(fixtures::random_relabel(h, rng));
            CHECK(c.r() == base.r());
            CHECK(c.kind == base.kind);
            CHECK(c.torus_like == base.torus_like);
            CHECK(sign_product(c) == sign_product(base));
        }
    }
}
