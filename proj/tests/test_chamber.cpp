#include "conewalls/chamber.hpp"

#include <algorithm>
#include <set>

#include "conewalls/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conewalls;
using conewalls::testing::RandomLattice;
using conewalls::testing::TestRng;

namespace {

LatticePtr lat_u() {
    IntMat g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    return make_lattice(g, IntVec{1, 1});
}

}  // namespace

TEST_CASE("single wall splits a cone into two chambers") {
    auto L = lat_u();
    RationalCone cone = RationalCone::from_generators(L, std::vector<IntVec>{{2, 1}, {1, 2}});
    Subdivision s = subdivide(cone, {IntVec{1, -1}});
    REQUIRE(s.chambers.size() == 2);
    CHECK(s.walls == std::vector<IntVec>{{1, -1}});
    CHECK(s.chambers[0].id == 0);
    CHECK(s.chambers[0].cone.generators() == std::vector<IntVec>{{1, 1}, {1, 2}});
    CHECK(s.chambers[1].id == 1);
    CHECK(s.chambers[1].cone.generators() == std::vector<IntVec>{{1, 1}, {2, 1}});
    // Sign vectors disagree exactly on the splitting wall.
    REQUIRE(s.chambers[0].wall_signs.size() == 1);
    CHECK(s.chambers[0].wall_signs[0] == -s.chambers[1].wall_signs[0]);
    CHECK(s.chambers[0].wall_signs[0] != 0);
}

TEST_CASE("no walls produce a single chamber") {
    auto L = lat_u();
    RationalCone cone = RationalCone::from_generators(L, std::vector<IntVec>{{2, 1}, {1, 2}});
    Subdivision s = subdivide(cone, {});
    REQUIRE(s.chambers.size() == 1);
    CHECK(cone_eq(s.chambers[0].cone, cone));
    CHECK(s.chambers[0].wall_signs.empty());
}

TEST_CASE("a wall containing the whole cone does not split it") {
    auto L = lat_u();
    RationalCone ray = RationalCone::from_generators(L, std::vector<IntVec>{{1, 1}});
    Subdivision s = subdivide(ray, {IntVec{1, -1}});
    REQUIRE(s.chambers.size() == 1);
    CHECK(cone_eq(s.chambers[0].cone, ray));
    CHECK(s.chambers[0].wall_signs == std::vector<int>{0});
}

TEST_CASE("duplicate and unnormalized walls collapse") {
    auto L = lat_u();
    RationalCone cone = RationalCone::from_generators(L, std::vector<IntVec>{{2, 1}, {1, 2}});
    Subdivision s = subdivide(cone, {IntVec{1, -1}, IntVec{-2, 2}, IntVec{1, -1}});
    CHECK(s.walls == std::vector<IntVec>{{1, -1}});
    CHECK(s.chambers.size() == 2);
}

TEST_CASE("locating points in a subdivision") {
    auto L = lat_u();
    RationalCone cone = RationalCone::from_generators(L, std::vector<IntVec>{{2, 1}, {1, 2}});
    Subdivision s = subdivide(cone, {IntVec{1, -1}});

    LocateResult r = locate(s, RatVec{Rat(3), Rat(2)});
    CHECK_FALSE(r.on_boundary);
    CHECK(s.chambers[static_cast<size_t>(r.chamber_id)].cone.generators() ==
          std::vector<IntVec>{{1, 1}, {2, 1}});

    LocateResult mid = locate(s, RatVec{Rat(1), Rat(1)});
    CHECK(mid.on_boundary);

    CHECK_THROWS_AS(locate(s, RatVec{Rat(1), Rat(-1)}), NotInConeError);
    CHECK_THROWS_AS(locate(s, RatVec{Rat(1), Rat(0)}), NotInConeError);
}

TEST_CASE("adjacency of a two chamber split") {
    auto L = lat_u();
    RationalCone cone = RationalCone::from_generators(L, std::vector<IntVec>{{2, 1}, {1, 2}});
    Subdivision s = subdivide(cone, {IntVec{1, -1}});
    auto edges = adjacency(s);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].a == 0);
    CHECK(edges[0].b == 1);
    CHECK(edges[0].wall == IntVec{1, -1});

    Subdivision single = subdivide(cone, {});
    CHECK(adjacency(single).empty());
}

TEST_CASE("two interior rays cut a path of three chambers") {
    auto L = lat_u();
    RationalCone cone = RationalCone::from_generators(L, std::vector<IntVec>{{3, 1}, {1, 3}});
    Subdivision s = subdivide(cone, {IntVec{1, -1}, IntVec{2, -1}});
    REQUIRE(s.chambers.size() == 3);
    auto edges = adjacency(s);
    REQUIRE(edges.size() == 2);
    // Path graph: each edge joins consecutive chambers, no chord.
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) seen.insert({e.a, e.b});
    CHECK(seen.size() == 2);
    std::vector<int> degree(3, 0);
    for (const auto& e : edges) {
        ++degree[static_cast<size_t>(e.a)];
        ++degree[static_cast<size_t>(e.b)];
    }
    CHECK(std::count(degree.begin(), degree.end(), 1) == 2);
    CHECK(std::count(degree.begin(), degree.end(), 2) == 1);
}

TEST_CASE("subdivision is independent of wall order") {
    auto L = lat_u();
    RationalCone cone = RationalCone::from_generators(L, std::vector<IntVec>{{3, 1}, {1, 3}});
    std::vector<IntVec> walls{{1, -1}, {2, -1}, {1, -2}};
    Subdivision a = subdivide(cone, walls);
    std::reverse(walls.begin(), walls.end());
    Subdivision b = subdivide(cone, walls);
    REQUIRE(a.chambers.size() == b.chambers.size());
    for (size_t i = 0; i < a.chambers.size(); ++i) {
        CHECK(cone_eq(a.chambers[i].cone, b.chambers[i].cone));
        CHECK(a.chambers[i].wall_signs == b.chambers[i].wall_signs);
    }
}

TEST_CASE("chambers partition sampled points") {
    TestRng rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        RandomLattice rl = conewalls::testing::random_lattice(rng, 3);
        std::vector<IntVec> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(conewalls::testing::random_positive_vector(rng, rl, 3, true));
        RationalCone cone = RationalCone::from_generators(rl.lattice, gens);
        auto walls = walls_meeting_cone(WallQuery{cone, Int(4)});
        std::vector<IntVec> wv;
        for (const Wall& w : walls) wv.push_back(w.v);
        Subdivision s = subdivide(cone, wv);

        // Walls containing the whole base span vanish on every interior
        // point and never mark a boundary.
        std::vector<bool> cuts(s.walls.size(), false);
        for (size_t k = 0; k < s.walls.size(); ++k)
            for (const IntVec& g : cone.generators())
                if (rl.lattice->pair(s.walls[k], g) != 0) {
                    cuts[k] = true;
                    break;
                }

        // Union covers the base interior and chamber interiors stay disjoint.
        for (int t = 0; t < 120; ++t) {
            RatVec p(3, Rat(0));
            for (const IntVec& g : cone.generators()) {
                Rat c(rng.range(1, 5));
                for (size_t i = 0; i < 3; ++i) p[i] += c * Rat(g[i]);
            }
            bool on_wall = false;
            for (size_t k = 0; k < s.walls.size(); ++k)
                if (cuts[k] && rl.lattice->pair(s.walls[k], p) == 0) on_wall = true;
            int owners = 0;
            for (const Chamber& ch : s.chambers)
                if (ch.cone.contains(p, Strictness::RelativeInterior)) ++owners;
            if (on_wall) {
                CHECK(owners == 0);
                CHECK(locate(s, p).on_boundary);
            } else {
                CHECK(owners == 1);
                LocateResult r = locate(s, p);
                CHECK_FALSE(r.on_boundary);
                CHECK(s.chambers[static_cast<size_t>(r.chamber_id)].cone.contains(
                    p, Strictness::RelativeInterior));
            }
        }
    }
}

TEST_CASE("chamber interiors avoid every wall of their subdivision") {
    auto L = lat_u();
    RationalCone cone = RationalCone::from_generators(L, std::vector<IntVec>{{3, 1}, {1, 3}});
    auto walls = walls_meeting_cone(WallQuery{cone, Int(5)});
    std::vector<IntVec> wv;
    for (const Wall& w : walls) wv.push_back(w.v);
    Subdivision s = subdivide(cone, wv);
    for (const Chamber& ch : s.chambers) {
        IntVec p = ch.cone.relative_interior_point();
        for (size_t k = 0; k < s.walls.size(); ++k) {
            Int v = L->pair(s.walls[k], p);
            CHECK(v != 0);
            CHECK((v > 0 ? 1 : -1) == ch.wall_signs[k]);
        }
    }
}
