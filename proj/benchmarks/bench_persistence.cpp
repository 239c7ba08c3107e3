// Apache License, Version 2.0, refer to LICENSE.txt
#include <benchmark/benchmark.h>

#include "topolect/persistence.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace {

std::vector<std::vector<double>> circle_cloud(size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> jitter(0.0, 0.05);
    std::vector<std::vector<double>> points;
    for (size_t i = 0; i < count; ++i) {
        const double a = 2.0 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(count);
        points.push_back({std::cos(a) + jitter(rng), std::sin(a) + jitter(rng)});
    }
    return points;
}

void BM_RipsFiltration(benchmark::State& state) {
    const auto cloud = circle_cloud(static_cast<size_t>(state.range(0)), 7);
    const auto dm = topolect::pairwise_distances(cloud);
    const double scale = topolect::max_distance(dm);
    for (auto _ : state) {
        auto f = topolect::rips_filtration(dm, 2, scale);
        benchmark::DoNotOptimize(f.size());
    }
}

void BM_Reduce(benchmark::State& state) {
    const auto cloud = circle_cloud(static_cast<size_t>(state.range(0)), 7);
    const auto dm = topolect::pairwise_distances(cloud);
    const auto f = topolect::rips_filtration(dm, 2, topolect::max_distance(dm));
    for (auto _ : state) {
        auto red = topolect::reduce(f);
        benchmark::DoNotOptimize(red.pairs.size());
    }
}

void BM_ReduceClearing(benchmark::State& state) {
    const auto cloud = circle_cloud(static_cast<size_t>(state.range(0)), 7);
    const auto dm = topolect::pairwise_distances(cloud);
    const auto f = topolect::rips_filtration(dm, 2, topolect::max_distance(dm));
    for (auto _ : state) {
        auto red = topolect::reduce(f, {.clearing = true});
        benchmark::DoNotOptimize(red.pairs.size());
    }
}

} // namespace

BENCHMARK(BM_RipsFiltration)->Arg(30)->Arg(60)->Arg(120);
BENCHMARK(BM_Reduce)->Arg(30)->Arg(60)->Arg(120);
BENCHMARK(BM_ReduceClearing)->Arg(30)->Arg(60)->Arg(120);

BENCHMARK_MAIN();
