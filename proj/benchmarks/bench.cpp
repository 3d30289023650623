#include <benchmark/benchmark.h>

#include "conewalls/chamber.hpp"
#include "conewalls/group.hpp"
#include "conewalls/lattice.hpp"
#include "conewalls/mukai.hpp"
#include "conewalls/walls.hpp"

using namespace conewalls;

namespace {

LatticePtr lat_rank3() {
    IntMat g(3, 3);
    g(0, 1) = 1;
    g(1, 0) = 1;
    g(2, 2) = -2;
    return make_lattice(g, IntVec{1, 1, 0});
}

RationalCone cone_rank3(const LatticePtr& L) {
    return RationalCone::from_generators(
        L, {IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{1, 1, 1}, IntVec{1, 1, -1}});
}

void bm_short_vectors(benchmark::State& state) {
    IntMat g(3, 3);
    g(0, 0) = -2;
    g(1, 1) = -4;
    g(2, 2) = -6;
    Rat bound(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(short_vectors(g, bound));
}
BENCHMARK(bm_short_vectors)->Arg(20)->Arg(80);

void bm_walls_meeting_cone(benchmark::State& state) {
    auto L = lat_rank3();
    WallQuery q{cone_rank3(L), Int(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(walls_meeting_cone(q));
}
BENCHMARK(bm_walls_meeting_cone)->Arg(2)->Arg(4)->Arg(8);

void bm_subdivide(benchmark::State& state) {
    auto L = lat_rank3();
    WallQuery q{cone_rank3(L), Int(state.range(0))};
    auto walls = walls_meeting_cone(q);
    std::vector<IntVec> wv;
    for (const Wall& w : walls) wv.push_back(w.v);
    for (auto _ : state) benchmark::DoNotOptimize(subdivide(q.cone, wv));
}
BENCHMARK(bm_subdivide)->Arg(2)->Arg(4);

void bm_dirichlet_domain(benchmark::State& state) {
    IntMat g(2, 2);
    g(0, 0) = 2;
    g(1, 1) = -6;
    auto L = make_lattice(g, IntVec{1, 0});
    IntMat m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 3;
    m(1, 0) = 1;
    m(1, 1) = 2;
    auto grp = make_group(L, {m});
    auto ambient = RationalCone::from_generators(L, {IntVec{2, 1}, IntVec{2, -1}});
    RatVec y{Rat(1), Rat(0)};
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_domain(grp, ambient, y, depth));
}
BENCHMARK(bm_dirichlet_domain)->Arg(4)->Arg(6);

void bm_sigma_walls(benchmark::State& state) {
    IntMat g(4, 4);
    g(0, 1) = 1;
    g(1, 0) = 1;
    g(2, 3) = 1;
    g(3, 2) = 1;
    MukaiSetup ms = make_mukai_setup(g, IntVec{1, 1, 0, 0});
    std::vector<IntVec> gens{{0, 1, 0}, {0, 0, 1}};
    for (auto _ : state) benchmark::DoNotOptimize(sigma_walls_meeting_cone(ms, gens));
}
BENCHMARK(bm_sigma_walls);

}  // namespace

BENCHMARK_MAIN();
