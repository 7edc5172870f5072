#include "cardmat/cutting_plane.hpp"
#include "cardmat/rng.hpp"
#include "cardmat/separation.hpp"
#include "cardmat/simplex.hpp"
#include "cardmat/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cardmat;

MatroidInstance wheel_graphic(int spokes) {
    // wheel W_k: hub 0, rim 1..k; 2k edges
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= spokes; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= spokes; ++i) edges.emplace_back(i, i % spokes + 1);
    return MatroidInstance::graphic(static_cast<std::size_t>(spokes + 1), std::move(edges));
}

Point random_point(Rng& rng, std::size_t n) {
    Point x;
    for (std::size_t e = 0; e < n; ++e) x.push_back(rng.rational(0, 8, 5));
    return x;
}

void BM_rank_sweep(benchmark::State& state) {
    auto m = wheel_graphic(static_cast<int>(state.range(0)));
    const std::size_t n = m.size();
    for (auto _ : state) {
        std::size_t total = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask)
            total += m.rank(Subset(mask, n));
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_rank_sweep)->Arg(4)->Arg(6);

void BM_separate_rank_bruteforce(benchmark::State& state) {
    auto m = wheel_graphic(static_cast<int>(state.range(0)));
    Rng rng(1);
    Point x = random_point(rng, m.size());
    for (auto _ : state) {
        auto result = separate_rank_bruteforce(m, x);
        benchmark::DoNotOptimize(result.second);
    }
}
BENCHMARK(BM_separate_rank_bruteforce)->Arg(4)->Arg(6)->Arg(8);

void BM_separate_rank_augpath(benchmark::State& state) {
    auto m = wheel_graphic(static_cast<int>(state.range(0)));
    Rng rng(1);
    Point x = random_point(rng, m.size());
    for (auto _ : state) {
        auto cert = separate_rank_augpath(m, x);
        benchmark::DoNotOptimize(cert.value);
    }
}
BENCHMARK(BM_separate_rank_augpath)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_separate_point(benchmark::State& state) {
    auto m = wheel_graphic(6);
    CardinalitySequence c({2, 5});
    Rng rng(2);
    Point x = separate_rank_augpath(m, random_point(rng, m.size())).y;
    for (auto _ : state) {
        auto out = separate_point(m, x, c);
        benchmark::DoNotOptimize(out.status);
    }
}
BENCHMARK(BM_separate_point);

void BM_simplex_full_system(benchmark::State& state) {
    auto m = wheel_graphic(static_cast<int>(state.range(0)));
    CardinalitySequence c({1, m.rank()});
    auto sys = build_full_system(m, c);
    WeightVector obj;
    Rng rng(3);
    for (std::size_t e = 0; e < m.size(); ++e) obj.emplace_back(rng.integer(-10, 10));
    for (auto _ : state) {
        auto sol = simplex_max(sys, obj);
        benchmark::DoNotOptimize(sol.value);
    }
}
// the explicit description has ~2^|E| rows; larger wheels belong to the
// cutting-plane path below
BENCHMARK(BM_simplex_full_system)->Arg(4);

void BM_cutting_plane(benchmark::State& state) {
    auto m = wheel_graphic(static_cast<int>(state.range(0)));
    CardinalitySequence c({1, m.rank()});
    WeightVector obj;
    Rng rng(4);
    for (std::size_t e = 0; e < m.size(); ++e) obj.emplace_back(rng.integer(-10, 10));
    for (auto _ : state) {
        auto result = cutting_plane_optimize(m, c, obj);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_cutting_plane)->Arg(4)->Arg(6);

void BM_enumerate_feasible(benchmark::State& state) {
    auto m = wheel_graphic(static_cast<int>(state.range(0)));
    CardinalitySequence c({1, m.rank()});
    for (auto _ : state) {
        auto sets = enumerate_feasible(m, c);
        benchmark::DoNotOptimize(sets.size());
    }
}
BENCHMARK(BM_enumerate_feasible)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
