// Apache License, Version 2.0, refer to LICENSE.txt
#include <benchmark/benchmark.h>

#include "topolect/diagram_distance.hpp"
#include "topolect/mds.hpp"

#include <random>

namespace {

topolect::PersistenceDiagram random_diagram(size_t points, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> birth(0.0, 1.0);
    std::uniform_real_distribution<double> gap(0.01, 1.0);
    topolect::PersistenceDiagram d;
    d.dim = 1;
    for (size_t i = 0; i < points; ++i) {
        topolect::DiagramPoint p;
        p.birth = birth(rng);
        p.death = p.birth + gap(rng);
        p.birth_index = i;
        p.death_index = i;
        d.points.push_back(p);
    }
    return d;
}

void BM_Wasserstein(benchmark::State& state) {
    const auto a = random_diagram(static_cast<size_t>(state.range(0)), 1);
    const auto b = random_diagram(static_cast<size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(topolect::wasserstein(a, b, 2.0));
}

void BM_Bottleneck(benchmark::State& state) {
    const auto a = random_diagram(static_cast<size_t>(state.range(0)), 1);
    const auto b = random_diagram(static_cast<size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(topolect::bottleneck(a, b));
}

void BM_ClassicalMds(benchmark::State& state) {
    const size_t n = static_cast<size_t>(state.range(0));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<std::vector<double>> cloud(n, std::vector<double>(4));
    for (auto& p : cloud)
        for (auto& x : p) x = coord(rng);
    const auto dm = topolect::pairwise_distances(cloud);
    for (auto _ : state) {
        auto e = topolect::classical_mds(dm, 2);
        benchmark::DoNotOptimize(e.stress);
    }
}

} // namespace

BENCHMARK(BM_Wasserstein)->Arg(10)->Arg(25)->Arg(50);
BENCHMARK(BM_Bottleneck)->Arg(10)->Arg(25)->Arg(50);
BENCHMARK(BM_ClassicalMds)->Arg(11)->Arg(50)->Arg(183);

BENCHMARK_MAIN();
