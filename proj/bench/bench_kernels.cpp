// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the team.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "geoconfig/kernels.hpp"
#include "geoconfig/oracle.hpp"
#include "geoconfig/ordered.hpp"

using namespace geoconfig;

namespace {

const OrderedConfig ex_p{Vec{-6, 4}, Vec{6, 8}};
const OrderedConfig ex_q{Vec{8, -6}, Vec{2, -10}};

const GeodesicPath& example_path() {
    static const GeodesicPath path = ordered::solve_geodesic(ex_p, ex_q).path;
    return path;
}

template <double (*Kernel)(const PathEval&, std::size_t)>
void BM_path_kernel(benchmark::State& state) {
    const PathEval eval = evaluator(example_path());
    const auto samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(eval, samples));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <double (*Kernel)(std::span<const double>, std::size_t)>
void BM_chord_length(benchmark::State& state) {
    const std::size_t dim = 6;
    std::vector<double> pts(static_cast<std::size_t>(state.range(0)) * dim);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> d;
    for (double& x : pts) x = d(rng);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(pts, dim));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_campaign(benchmark::State& state) {
    oracle::OracleOptions opts;
    opts.waypoints = 100;
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? oracle::run_campaign(count, 2, 7, opts) : oracle::run_campaign_serial(count, 2, 7, opts);
        benchmark::DoNotOptimize(r.data());
    }
}

}  // namespace

BENCHMARK(BM_path_kernel<kernels::min_gap_along_serial>)->Name("min_gap/serial")->Range(1 << 10, 1 << 18);
BENCHMARK(BM_path_kernel<kernels::min_gap_along>)->Name("min_gap/omp")->Range(1 << 10, 1 << 18);
BENCHMARK(BM_path_kernel<kernels::polyline_length_serial>)->Name("polyline/serial")->Range(1 << 10, 1 << 18);
BENCHMARK(BM_path_kernel<kernels::polyline_length>)->Name("polyline/omp")->Range(1 << 10, 1 << 18);
BENCHMARK(BM_chord_length<kernels::chord_length_serial>)->Name("chord/serial")->Range(1 << 10, 1 << 20);
BENCHMARK(BM_chord_length<kernels::chord_length>)->Name("chord/omp")->Range(1 << 10, 1 << 20);
BENCHMARK(BM_campaign<false>)->Name("campaign/serial")->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_campaign<true>)->Name("campaign/omp")->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
