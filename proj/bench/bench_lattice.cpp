#include <benchmark/benchmark.h>

#include "polyidp/parallel.hpp"
#include "polyidp/polytope.hpp"
#include "polyidp/verify.hpp"

using namespace polyidp;

namespace {

// range(0): dilation; range(1): 0 for a same-size pair, 1 for mixed sizes
SymmetricPolytope instance(const benchmark::State& state) {
    if (state.range(1) == 0) return SymmetricPolytope::from_generators({{10, 2, 1}, {7, 6, 0}}, 3);
    return SymmetricPolytope::from_generators({{6, 2, 1}, {5, 5}}, 3);
}

void BM_LatticePoints(benchmark::State& state) {
    const auto p = instance(state);
    const int t = static_cast<int>(state.range(0));
    std::size_t n = 0;
    for (auto _ : state) {
        auto pts = lattice_points(p, t);
        n = pts.size();
        benchmark::DoNotOptimize(pts);
    }
    state.counters["points"] = static_cast<double>(n);
    state.counters["threads"] = max_threads();
}

void BM_LatticePointsReference(benchmark::State& state) {
    const auto p = instance(state);
    const int t = static_cast<int>(state.range(0));
    std::size_t n = 0;
    for (auto _ : state) {
        auto pts = lattice_points_reference(p, t);
        n = pts.size();
        benchmark::DoNotOptimize(pts);
    }
    state.counters["points"] = static_cast<double>(n);
}

void BM_CheckSnp(benchmark::State& state) {
    const SchurSum s({{10, 2, 1}, {7, 6, 0}}, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_snp(s, static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_LatticePoints)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticePointsReference)->ArgsProduct({{1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckSnp)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    apply_thread_limit();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
