#include "conewalls/walls.hpp"

#include <algorithm>

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

std::vector<IntVec> wall_vectors(const std::vector<Wall>& walls) {
    std::vector<IntVec> out;
    for (const Wall& w : walls) out.push_back(w.v);
    return out;
}

WallQuery query_of(const LatticePtr& L, const std::vector<IntVec>& gens, long n) {
    return WallQuery{RationalCone::from_generators(L, gens), Int(n)};
}

}  // namespace

TEST_CASE("walls crossing a segment between interior points") {
    auto L = lat_u();
    auto walls = walls_on_segment(L, IntVec{2, 1}, IntVec{1, 2}, Int(3));
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].v == IntVec{1, -1});
    CHECK(walls[0].square == -2);

    CHECK(walls_on_segment(L, IntVec{2, 1}, IntVec{1, 2}, Int(1)).empty());
}

TEST_CASE("segment enumeration preconditions") {
    auto L = lat_u();
    CHECK_THROWS_AS(walls_on_segment(L, IntVec{2, 1}, IntVec{2, 1}, Int(3)), PreconditionError);
    CHECK_THROWS_AS(walls_on_segment(L, IntVec{2, 1}, IntVec{4, 2}, Int(3)), PreconditionError);
    CHECK_THROWS_AS(walls_on_segment(L, IntVec{1, 0}, IntVec{1, 2}, Int(3)), PreconditionError);
    CHECK_THROWS_AS(walls_on_segment(L, IntVec{2, 1}, IntVec{1, 2}, Int(0)), PreconditionError);
}

TEST_CASE("walls meeting an isotropic plane") {
    auto L = lat_u();
    auto walls = walls_on_isotropic_plane(L, IntVec{1, 0}, RatVec{Rat(1), Rat(1)}, Int(3));
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].v == IntVec{1, -1});
    CHECK(walls[0].square == -2);

    CHECK(walls_on_isotropic_plane(L, IntVec{1, 0}, RatVec{Rat(1), Rat(1)}, Int(1)).empty());
    CHECK_THROWS_AS(walls_on_isotropic_plane(L, IntVec{1, 1}, RatVec{Rat(2), Rat(1)}, Int(3)),
                    PreconditionError);
    CHECK_THROWS_AS(walls_on_isotropic_plane(L, IntVec{1, 0}, RatVec{Rat(2), Rat(0)}, Int(3)),
                    PreconditionError);
}

TEST_CASE("walls meeting a two generator cone") {
    auto L = lat_u();
    auto walls = walls_meeting_cone(query_of(L, {{2, 1}, {1, 2}}, 3));
    CHECK(wall_vectors(walls) == std::vector<IntVec>{{1, -1}});
    CHECK(walls_meeting_cone(query_of(L, {{2, 1}, {1, 2}}, 1)).empty());
}

TEST_CASE("walls meeting a single ray") {
    auto L = lat_u();
    auto walls = walls_meeting_cone(query_of(L, {{1, 1}}, 3));
    CHECK(wall_vectors(walls) == std::vector<IntVec>{{1, -1}});
    // An isotropic ray runs along the boundary and meets no wall interior.
    CHECK(walls_meeting_cone(query_of(L, {{1, 0}}, 3)).empty());
}

TEST_CASE("walls meeting the full quadrant with isotropic generators") {
    auto L = lat_u();
    auto walls = walls_meeting_cone(query_of(L, {{1, 0}, {0, 1}}, 3));
    CHECK(wall_vectors(walls) == std::vector<IntVec>{{1, -1}});
}

TEST_CASE("wall query validation") {
    auto L = lat_u();
    CHECK_THROWS_AS(walls_meeting_cone(query_of(L, {{1, -1}}, 3)), PreconditionError);
    CHECK_THROWS_AS(walls_meeting_cone(query_of(L, {{2, 1}}, 0)), PreconditionError);
    CHECK(walls_meeting_cone(query_of(L, {}, 3)).empty());
}

TEST_CASE("brute force box scan") {
    auto L = lat_u();
    auto walls = brute_force_walls(query_of(L, {{2, 1}, {1, 2}}, 3), Int(10));
    CHECK(wall_vectors(walls) == std::vector<IntVec>{{1, -1}});
    CHECK(brute_force_walls(query_of(L, {{2, 1}, {1, 2}}, 1), Int(10)).empty());
    CHECK(brute_force_walls(query_of(L, {{2, 1}, {1, 2}}, 3), Int(0)).empty());
}

TEST_CASE("every returned wall is sound") {
    auto L = lat_u();
    WallQuery q = query_of(L, {{3, 1}, {1, 3}}, 5);
    auto walls = walls_meeting_cone(q);
    CHECK_FALSE(walls.empty());
    for (const Wall& w : walls) {
        CHECK(w.square == L->square(w.v));
        CHECK(w.square > -5);
        CHECK(w.v == L->normalize_wall(w.v));
        CHECK(wall_separates(q.cone, w.v));
    }
    CHECK(std::is_sorted(walls.begin(), walls.end(), wall_less));
}

TEST_CASE("enumeration equals the box oracle on random instances") {
    TestRng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.range(2, 3));
        RandomLattice rl = conewalls::testing::random_lattice(rng, n);
        std::vector<IntVec> gens;
        int k = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < k; ++i)
            gens.push_back(conewalls::testing::random_positive_vector(rng, rl, 3, false));
        WallQuery q{RationalCone::from_generators(rl.lattice, gens),
                    Int(rng.range(1, 5))};
        auto fast = walls_meeting_cone(q);
        auto slow = brute_force_walls(q, brute_force_box(q));
        CHECK(wall_vectors(fast) == wall_vectors(slow));
    }
}

TEST_CASE("wall sets grow with the square bound") {
    TestRng rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        RandomLattice rl = conewalls::testing::random_lattice(rng, 3);
        std::vector<IntVec> gens{conewalls::testing::random_positive_vector(rng, rl, 3, true),
                                 conewalls::testing::random_positive_vector(rng, rl, 3, true)};
        RationalCone cone = RationalCone::from_generators(rl.lattice, gens);
        auto small = wall_vectors(walls_meeting_cone(WallQuery{cone, Int(2)}));
        auto large = wall_vectors(walls_meeting_cone(WallQuery{cone, Int(5)}));
        CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end(), lex_less));
    }
}

TEST_CASE("wall sets ignore generator scaling") {
    auto L = lat_u();
    auto a = walls_meeting_cone(query_of(L, {{2, 1}, {1, 2}}, 4));
    auto b = walls_meeting_cone(query_of(L, {{4, 2}, {3, 6}}, 4));
    CHECK(wall_vectors(a) == wall_vectors(b));
}

TEST_CASE("wall sets are additive over a subdivision") {
    TestRng rng(73);
    int exercised = 0;
    for (int trial = 0; trial < 20 && exercised < 5; ++trial) {
        RandomLattice rl = conewalls::testing::random_lattice(rng, 3);
        std::vector<IntVec> gens;
        for (int i = 0; i < 3; ++i)
            gens.push_back(conewalls::testing::random_positive_vector(rng, rl, 3, true));
        RationalCone cone = RationalCone::from_generators(rl.lattice, gens);
        if (cone.dim() < 3) continue;
        Int n(6);
        auto whole = walls_meeting_cone(WallQuery{cone, n});
        const IntVec* split = nullptr;
        for (const Wall& w : whole) {
            bool strict_pos = false;
            bool strict_neg = false;
            for (const IntVec& g : cone.generators()) {
                Int p = rl.lattice->pair(g, w.v);
                if (p > 0) strict_pos = true;
                if (p < 0) strict_neg = true;
            }
            if (strict_pos && strict_neg) {
                split = &w.v;
                break;
            }
        }
        if (!split) continue;
        ++exercised;
        RationalCone left = intersect_halfspace(cone, *split, HalfspaceSign::NonNegative);
        RationalCone right = intersect_halfspace(cone, *split, HalfspaceSign::NonPositive);
        auto lw = wall_vectors(walls_meeting_cone(WallQuery{left, n}));
        auto rw = wall_vectors(walls_meeting_cone(WallQuery{right, n}));
        std::vector<IntVec> merged;
        std::set_union(lw.begin(), lw.end(), rw.begin(), rw.end(), std::back_inserter(merged),
                       lex_less);
        CHECK(merged == wall_vectors(whole));
    }
    CHECK(exercised > 0);
}

TEST_CASE("independent pairs in the closed cone pair positively") {
    TestRng rng(131);
    for (int trial = 0; trial < 500; ++trial) {
        int n = static_cast<int>(rng.range(2, 4));
        RandomLattice rl = conewalls::testing::random_lattice(rng, n);
        IntVec x1 = conewalls::testing::random_positive_vector(rng, rl, 4, false);
        IntVec x2 = conewalls::testing::random_positive_vector(rng, rl, 4, false);
        Int p = rl.lattice->pair(x1, x2);
        CHECK(p >= 0);
        if (p == 0) {
            CHECK(rl.lattice->square(x1) == 0);
            CHECK(rl.lattice->square(x2) == 0);
            CHECK(rank(mat_from_rows({x1, x2}, n)) == 1);
        }
        if (rank(mat_from_rows({x1, x2}, n)) == 2) {
            CHECK(rl.lattice->square(vec_add(x1, x2)) > 0);
        }
    }
}
