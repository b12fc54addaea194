// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fourcsp/closure.hpp"
#include "fourcsp/fm_oracle.hpp"
#include "fourcsp/lindep.hpp"
#include "fourcsp/matrix2d.hpp"
#include "fourcsp/solver.hpp"

namespace {

using namespace fourcsp;

// Octagonal constraints satisfied by the all-zero point. Needs n >= 2.
std::vector<Constraint4> octagon_system(int n, std::size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> var(1, n);
    std::uniform_int_distribution<int> slack(0, 6);
    std::vector<Constraint4> cs;
    for (VarId v = 1; v <= n; ++v) {
        cs.push_back(Constraint4{v, 0, 0, 0, Bound(8L)});
        cs.push_back(Constraint4{0, v, 0, 0, Bound(8L)});
    }
    while (cs.size() < count) {
        const VarId a = var(rng);
        const VarId b = var(rng);
        if (a != b) {
            cs.push_back(Constraint4{a, b, 0, 0, Bound(static_cast<long>(slack(rng)))});
        }
    }
    return cs;
}

void BM_SingleSweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix2D m = load(octagon_system(n, 3 * static_cast<std::size_t>(n), 17), n);
    ClosureOptions opts;
    opts.max_sweeps = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(close(m, opts));
    }
}
BENCHMARK(BM_SingleSweep)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_CloseOctagon(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix2D m = load(octagon_system(n, 3 * static_cast<std::size_t>(n), 29), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(close(m));
    }
}
BENCHMARK(BM_CloseOctagon)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto cs = octagon_system(n, 3 * static_cast<std::size_t>(n), 41);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(cs, n));
    }
}
BENCHMARK(BM_Solve)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_FmFeasible(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sys = LinearSystem::from_constraints(octagon_system(n, 4 * static_cast<std::size_t>(n), 53), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fm_feasible(sys));
    }
}
BENCHMARK(BM_FmFeasible)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_EnumerateHcycles(benchmark::State& state) {
    const int n = 4;
    const auto cs = octagon_system(n, static_cast<std::size_t>(state.range(0)), 67);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_simple_hcycles(cs, kDefaultMaxCycleSize));
    }
}
BENCHMARK(BM_EnumerateHcycles)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
