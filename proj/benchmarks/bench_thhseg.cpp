#include <benchmark/benchmark.h>
#include <thhseg/comparison.hpp>
#include <thhseg/hochschild.hpp>
#include <thhseg/singer.hpp>
#include <thhseg/steenrod.hpp>
#include <thhseg/tate_ss.hpp>

using namespace thhseg;

static void BM_SteenrodConstruct(benchmark::State& state) {
    const int D = static_cast<int>(state.range(0));
    for (auto _ : state) {
        DualSteenrodAlgebra A(PrimeField(3), D);
        benchmark::DoNotOptimize(A.k_max());
    }
}
BENCHMARK(BM_SteenrodConstruct)->Arg(20)->Arg(52)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_CoproductXibar(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    DualSteenrodAlgebra A(PrimeField(3), 160);
    const Element x = A.xibar(k);
    for (auto _ : state)
        benchmark::DoNotOptimize(A.coproduct(x));
}
BENCHMARK(BM_CoproductXibar)->DenseRange(1, 4);

static void BM_HopfSuite(benchmark::State& state) {
    DualSteenrodAlgebra A(PrimeField(3), 52);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_hopf_structure(A, static_cast<int>(state.range(0))).pass());
}
BENCHMARK(BM_HopfSuite)->Arg(20)->Arg(52)->Unit(benchmark::kMillisecond);

static void BM_Epsilon(benchmark::State& state) {
    const SingerConstruction S(HomologyModel::bp(PrimeField(3), 3));
    const Element x = S.xibar(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(S.epsilon(x));
}
BENCHMARK(BM_Epsilon)->DenseRange(1, 3);

static void BM_TateE3(benchmark::State& state) {
    const HomologyModel thh = HomologyModel::mu(PrimeField(3), 3).thh();
    const int d = static_cast<int>(state.range(0));
    const TateWindow w{-d / 2, 0, -d / 2, d};
    for (auto _ : state)
        benchmark::DoNotOptimize(e3_page(thh, w).cells.size());
}
BENCHMARK(BM_TateE3)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_Segal(benchmark::State& state) {
    const Comparison C(HomologyModel::mu(PrimeField(3), 3));
    SegalOptions o;
    o.degree_max = static_cast<int>(state.range(0));
    o.floor = -o.degree_max / 2;
    o.composite_span = o.degree_max - o.floor;
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_segal(C, o).pass());
}
BENCHMARK(BM_Segal)->Arg(12)->Arg(20)->Arg(28)->Unit(benchmark::kMillisecond);

static void BM_Hochschild(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_hochschild_polynomial(PrimeField(3), 2, static_cast<int>(state.range(0))).pass());
}
BENCHMARK(BM_Hochschild)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
