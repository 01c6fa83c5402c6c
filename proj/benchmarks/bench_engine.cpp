#include <benchmark/benchmark.h>

#include "crossl/bounds.hpp"
#include "crossl/fragments.hpp"
#include "crossl/search.hpp"

using namespace crossl;

static void BM_BinomExact(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(binom_exact(n, n / 2));
}
BENCHMARK(BM_BinomExact)->Arg(20)->Arg(200)->Arg(2000);

static void BM_BoundCross2(benchmark::State& state) {
    const LSpec L = LSpec::parse("0,2", 3);
    for (auto _ : state) benchmark::DoNotOptimize(bound_cross2(static_cast<int>(state.range(0)), 3, L));
}
BENCHMARK(BM_BoundCross2)->Arg(10)->Arg(40)->Arg(63);

static void BM_Alpha(benchmark::State& state) {
    const IntersectionGraph g(static_cast<int>(state.range(0)), 3, LSpec::parse("0,1", 3));
    AlphaOptions opts;
    opts.use_symmetry = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(alpha_nontrivial(g, opts));
}
BENCHMARK(BM_Alpha)->Args({7, 1})->Args({8, 1})->Args({8, 0})->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FamilyTuple t({random_family(n, 2, 6, 1), random_family(n, 2, 9, 2), random_family(n, 2, 4, 3)});
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(9)->Unit(benchmark::kMicrosecond);

static void BM_PairwiseSearch(benchmark::State& state) {
    SearchOptions opts;
    opts.collect_witnesses = false;
    opts.threads = static_cast<unsigned>(state.range(1));
    const LSpec L = LSpec::parse("0,2", 2);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_pairwise_max(static_cast<int>(state.range(0)), 2, 3, L, opts));
}
BENCHMARK(BM_PairwiseSearch)->Args({7, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_Shadow(benchmark::State& state) {
    const SetFamily f = random_family(12, 5, static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(shadow(f, 3));
}
BENCHMARK(BM_Shadow)->Arg(50)->Arg(400)->Arg(792);

BENCHMARK_MAIN();
