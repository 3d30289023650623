#include "conewalls/cone.hpp"

#include <algorithm>

#include "conewalls/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conewalls;

namespace {

LatticePtr lat_u() {
    IntMat g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    return make_lattice(g, IntVec{1, 1});
}

LatticePtr lat_u_m2() {
    IntMat g(3, 3);
    g(0, 1) = 1;
    g(1, 0) = 1;
    g(2, 2) = -2;
    return make_lattice(g, IntVec{1, 1, 0});
}

}  // namespace

TEST_CASE("double description of simple systems") {
    DdResult quad = dd_rays(2, {IntVec{1, 0}, IntVec{0, 1}});
    CHECK(quad.lineality.empty());
    CHECK(quad.rays == std::vector<IntVec>{{0, 1}, {1, 0}});

    DdResult plane = dd_rays(2, {});
    CHECK(plane.rays.empty());
    CHECK(plane.lineality.size() == 2);

    DdResult half = dd_rays(2, {IntVec{1, -1}});
    CHECK(half.lineality == std::vector<IntVec>{{1, 1}});
    REQUIRE(half.rays.size() == 1);
    CHECK(dot(half.rays[0], IntVec{1, -1}) > 0);

    DdResult point = dd_rays(2, {IntVec{1, 0}, IntVec{-1, 0}, IntVec{0, 1}, IntVec{0, -1}});
    CHECK(point.rays.empty());
    CHECK(point.lineality.empty());
}

TEST_CASE("cone generators are minimized and sorted") {
    auto L = lat_u();
    RationalCone c = RationalCone::from_generators(
        L, std::vector<IntVec>{{2, 1}, {1, 2}, {1, 1}});
    CHECK(c.generators() == std::vector<IntVec>{{1, 2}, {2, 1}});
    CHECK(c.dim() == 2);
    CHECK(c.pointed());
    CHECK_FALSE(c.is_zero());

    RationalCone ray = RationalCone::from_generators(L, std::vector<IntVec>{{2, 2}});
    CHECK(ray.generators() == std::vector<IntVec>{{1, 1}});
    CHECK(ray.dim() == 1);

    RationalCone zero = RationalCone::from_generators(L, std::vector<IntVec>{});
    CHECK(zero.is_zero());
    CHECK(zero.dim() == 0);
    CHECK(zero.relative_interior_point() == IntVec{0, 0});
}

TEST_CASE("facet normals act through the lattice pairing") {
    auto L = lat_u();
    RationalCone quad = RationalCone::from_generators(
        L, std::vector<IntVec>{{1, 0}, {0, 1}});
    CHECK(quad.facet_normals() == std::vector<IntVec>{{0, 1}, {1, 0}});
    // Under the hyperbolic pairing, (0,1) vanishes on the ray (0,1) itself.
    CHECK(L->pair(IntVec{0, 1}, IntVec{0, 1}) == 0);
    CHECK(L->pair(IntVec{1, 0}, IntVec{0, 1}) == 1);
}

TEST_CASE("membership with closed and relative interior strictness") {
    auto L = lat_u();
    RationalCone c = RationalCone::from_generators(
        L, std::vector<IntVec>{{2, 1}, {1, 2}});
    CHECK(c.contains(IntVec{1, 1}, Strictness::RelativeInterior));
    CHECK(c.contains(IntVec{1, 1}, Strictness::Closed));
    CHECK(c.contains(IntVec{2, 1}, Strictness::Closed));
    CHECK_FALSE(c.contains(IntVec{2, 1}, Strictness::RelativeInterior));
    CHECK_FALSE(c.contains(IntVec{1, -1}, Strictness::Closed));
    CHECK_FALSE(c.contains(IntVec{1, 0}, Strictness::Closed));
    CHECK(c.contains(RatVec{Rat(3, 2), Rat(3, 2)}, Strictness::RelativeInterior));
    CHECK(c.contains(IntVec{0, 0}, Strictness::Closed));
    CHECK_FALSE(c.contains(IntVec{0, 0}, Strictness::RelativeInterior));
}

TEST_CASE("membership on lower dimensional cones") {
    auto L = lat_u();
    RationalCone ray = RationalCone::from_generators(L, std::vector<IntVec>{{1, 1}});
    CHECK(ray.contains(IntVec{3, 3}, Strictness::RelativeInterior));
    CHECK_FALSE(ray.contains(IntVec{0, 0}, Strictness::RelativeInterior));
    CHECK(ray.contains(IntVec{0, 0}, Strictness::Closed));
    CHECK_FALSE(ray.contains(IntVec{1, 2}, Strictness::Closed));
    CHECK(ray.span_contains(RatVec{Rat(-2), Rat(-2)}));
    CHECK_FALSE(ray.span_contains(RatVec{Rat(1), Rat(0)}));
}

TEST_CASE("relative interior points lie in the relative interior") {
    auto L = lat_u_m2();
    RationalCone c = RationalCone::from_generators(
        L, std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 1, -1}});
    IntVec p = c.relative_interior_point();
    CHECK(c.contains(p, Strictness::RelativeInterior));
}

TEST_CASE("halfspace intersection splits a cone along a wall") {
    auto L = lat_u();
    RationalCone quad = RationalCone::from_generators(
        L, std::vector<IntVec>{{1, 0}, {0, 1}});

    RationalCone pos = intersect_halfspace(quad, IntVec{1, -1}, HalfspaceSign::NonNegative);
    CHECK(pos.generators() == std::vector<IntVec>{{0, 1}, {1, 1}});
    RationalCone neg = intersect_halfspace(quad, IntVec{1, -1}, HalfspaceSign::NonPositive);
    CHECK(neg.generators() == std::vector<IntVec>{{1, 0}, {1, 1}});
    RationalCone on = intersect_halfspace(quad, IntVec{1, -1}, HalfspaceSign::Zero);
    CHECK(on.generators() == std::vector<IntVec>{{1, 1}});
    CHECK(on.dim() == 1);

    // A zero functional never cuts.
    RationalCone same = intersect_halfspace(quad, IntVec{0, 0}, HalfspaceSign::NonNegative);
    CHECK(cone_eq(same, quad));
}

TEST_CASE("cone intersection and structural equality") {
    auto L = lat_u();
    RationalCone a = RationalCone::from_generators(L, std::vector<IntVec>{{1, 0}, {1, 2}});
    RationalCone b = RationalCone::from_generators(L, std::vector<IntVec>{{2, 1}, {0, 1}});
    RationalCone inter = intersect(a, b);
    CHECK(inter.generators() == std::vector<IntVec>{{1, 2}, {2, 1}});

    RationalCone a2 = RationalCone::from_generators(L, std::vector<IntVec>{{1, 2}, {1, 0}, {1, 1}});
    CHECK(cone_eq(a, a2));
    CHECK_FALSE(cone_eq(a, b));

    RationalCone ray = RationalCone::from_generators(L, std::vector<IntVec>{{1, 1}});
    RationalCone touching = RationalCone::from_generators(L, std::vector<IntVec>{{1, 1}, {1, 0}});
    CHECK(cone_eq(intersect(ray, touching), ray));
}

TEST_CASE("transform maps generators through the matrix") {
    auto L = lat_u();
    IntMat swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    RationalCone c = RationalCone::from_generators(L, std::vector<IntVec>{{2, 1}, {1, 1}});
    RationalCone t = transform(c, swap);
    CHECK(t.generators() == std::vector<IntVec>{{1, 1}, {1, 2}});
    CHECK(cone_eq(transform(t, swap), c));
}

TEST_CASE("facet cones of the quadrant are its boundary rays") {
    auto L = lat_u();
    RationalCone quad = RationalCone::from_generators(
        L, std::vector<IntVec>{{1, 0}, {0, 1}});
    REQUIRE(quad.facet_normals().size() == 2);
    std::vector<IntVec> facet_rays;
    for (int i = 0; i < 2; ++i) {
        RationalCone f = facet_cone(quad, i);
        CHECK(f.dim() == 1);
        facet_rays.push_back(f.generators()[0]);
    }
    std::sort(facet_rays.begin(), facet_rays.end(), lex_less);
    CHECK(facet_rays == std::vector<IntVec>{{0, 1}, {1, 0}});
}

TEST_CASE("cones with lineality") {
    auto L = lat_u();
    RationalCone line = RationalCone::from_generators(
        L, std::vector<IntVec>{{1, 1}, {-1, -1}, {1, 0}});
    CHECK_FALSE(line.pointed());
    CHECK(line.dim() == 2);
    CHECK(line.lineality().size() == 1);
    // The relative interior is the open halfplane on the (1,0) side.
    CHECK(line.contains(IntVec{-1, -2}, Strictness::RelativeInterior));
    CHECK(line.contains(IntVec{-2, -2}, Strictness::Closed));
    CHECK_FALSE(line.contains(IntVec{-3, -2}, Strictness::Closed));
}

TEST_CASE("wall separation against the open positive cone") {
    auto L = lat_u();
    RationalCone quad = RationalCone::from_generators(
        L, std::vector<IntVec>{{1, 0}, {0, 1}});
    CHECK(wall_separates(quad, IntVec{1, -1}));
    CHECK_FALSE(wall_separates(quad, IntVec{0, 1}));
    CHECK_FALSE(wall_separates(quad, IntVec{1, 0}));

    RationalCone ray = RationalCone::from_generators(L, std::vector<IntVec>{{1, 1}});
    CHECK(wall_separates(ray, IntVec{1, -1}));
    CHECK_FALSE(wall_separates(ray, IntVec{1, 1}));

    RationalCone bad = RationalCone::from_generators(L, std::vector<IntVec>{{1, -1}});
    CHECK_THROWS_AS(wall_separates(bad, IntVec{1, 1}), PreconditionError);
    CHECK_THROWS_AS(wall_separates(quad, IntVec{0, 0}), Error);
}

TEST_CASE("separation witnesses are exact") {
    auto L = lat_u();
    RationalCone quad = RationalCone::from_generators(
        L, std::vector<IntVec>{{1, 0}, {0, 1}});
    auto w = separation_witness(quad, IntVec{1, -1});
    REQUIRE(w.has_value());
    CHECK(L->pair(*w, IntVec{1, -1}) == 0);
    CHECK(L->cone_position(*w) == ConePosition::InteriorPositive);
    CHECK(quad.contains(*w, Strictness::Closed));
    CHECK_FALSE(separation_witness(quad, IntVec{0, 1}).has_value());
}

TEST_CASE("halfspace pieces cover the cone") {
    auto L = lat_u_m2();
    RationalCone c = RationalCone::from_generators(
        L, std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 1, -1}});
    IntVec w{0, 0, 1};
    RationalCone plus = intersect_halfspace(c, w, HalfspaceSign::NonNegative);
    RationalCone minus = intersect_halfspace(c, w, HalfspaceSign::NonPositive);
    conewalls::testing::TestRng rng(5);
    for (int t = 0; t < 200; ++t) {
        IntVec p(3, Int(0));
        for (const IntVec& g : c.generators()) {
            Int coef = rng.range(0, 4);
            for (size_t i = 0; i < 3; ++i) p[i] += coef * g[i];
        }
        bool in_plus = plus.contains(p, Strictness::Closed);
        bool in_minus = minus.contains(p, Strictness::Closed);
        Int side = L->pair(p, w);
        if (side > 0) {
            CHECK(in_plus);
            CHECK_FALSE(in_minus);
        } else if (side < 0) {
            CHECK(in_minus);
            CHECK_FALSE(in_plus);
        } else {
            CHECK(in_plus);
            CHECK(in_minus);
        }
    }
}
