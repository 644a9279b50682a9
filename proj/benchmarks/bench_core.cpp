#include "pdwbc/det.hpp"
#include "pdwbc/lattice.hpp"
#include "pdwbc/mc.hpp"
#include "pdwbc/onepoint.hpp"
#include "pdwbc/partition.hpp"
#include "pdwbc/qism.hpp"
#include "pdwbc/seeded.hpp"

#include <benchmark/benchmark.h>

using namespace pdwbc;

namespace {

std::vector<std::vector<Rational>> random_matrix(int n, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (auto& row : m) {
        for (auto& x : row) x = rng.small_rational();
    }
    return m;
}

void BM_DetBareiss(benchmark::State& state) {
    const auto m = random_matrix(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_exact(m));
    }
}
BENCHMARK(BM_DetBareiss)->Arg(4)->Arg(8)->Arg(12);

void BM_GSeriesPoly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_series(n, n));
    }
}
BENCHMARK(BM_GSeriesPoly)->Arg(8)->Arg(16)->Arg(32);

void BM_GSeriesScalar(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    const Rational t(1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_series_at(2 * s, s, t));
    }
}
BENCHMARK(BM_GSeriesScalar)->Arg(50)->Arg(100)->Arg(200);

void BM_GResidue(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    const Rational t(2, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_residue_homogeneous(3 * s, s, t));
    }
}
BENCHMARK(BM_GResidue)->Arg(4)->Arg(8)->Arg(16);

void BM_ZBruteforce(benchmark::State& state) {
    const auto spec = LatticeSpec::homogeneous(4, 7, Rational(1, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_bruteforce(spec));
    }
}
BENCHMARK(BM_ZBruteforce);

void BM_ZHomogeneous(benchmark::State& state) {
    const Rational t(1, 2);
    const int s = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_homogeneous(t, s, s + 15));
    }
}
BENCHMARK(BM_ZHomogeneous)->Arg(3)->Arg(5)->Arg(8);

void BM_ZBracket(benchmark::State& state) {
    const auto spec = LatticeSpec::homogeneous(3, static_cast<int>(state.range(0)),
                                               Rational(1, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_bracket(spec));
    }
}
BENCHMARK(BM_ZBracket)->Arg(4)->Arg(6)->Arg(8);

void BM_OdeResidual(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ode_residual(n, n));
    }
}
BENCHMARK(BM_OdeResidual)->Arg(4)->Arg(8);

void BM_ExitResidue(benchmark::State& state) {
    const ExitPattern pattern({1, 3, 5, 7});
    const Rational t(1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(z_exit_residue_raw(pattern, t));
    }
}
BENCHMARK(BM_ExitResidue);

void BM_McSampler(benchmark::State& state) {
    const auto samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_sample_exits(3, 0.5, samples, 17));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(samples));
}
BENCHMARK(BM_McSampler)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
