#include <benchmark/benchmark.h>

#include "symprod/macdonald.hpp"
#include "symprod/signature.hpp"
#include "symprod/tensor_oracle.hpp"

using namespace symprod;

namespace {

HodgeNumbers sample_hodge()
{
    return HodgeNumbers::from_entries({{{0, 0, 0}, 1}, {{1, 0, 1}, 2}, {{0, 1, 1}, 2}, {{1, 1, 2}, 1}});
}

GradedPairing sample_pairing()
{
    const GradedPairing b0({{0, 2}}, {{0, Matrix(std::vector<std::vector<Rational>>{{1, 1}, {1, 0}})}});
    const GradedPairing b1({{1, 2}, {-1, 2}}, {{1, Matrix(std::vector<std::vector<Rational>>{{1, -1}, {0, 1}})}});
    const GradedPairing b2({{2, 1}, {-2, 2}}, {{2, Matrix(std::vector<std::vector<Rational>>{{1, 1}})}});
    return direct_sum(direct_sum(b0, b1), b2);
}

void BM_SymHodgeSeries(benchmark::State& state)
{
    const HodgeNumbers h = sample_hodge();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sym_hodge_series(h, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_SymHodgeSeries)->Arg(4)->Arg(8)->Arg(12);

void BM_ESeriesExponential(benchmark::State& state)
{
    const HodgeNumbers h = sample_hodge();
    for (auto _ : state) {
        benchmark::DoNotOptimize(e_series(h, static_cast<std::size_t>(state.range(0)), SeriesForm::exponential));
    }
}
BENCHMARK(BM_ESeriesExponential)->Arg(4)->Arg(8)->Arg(12);

void BM_BruteSignature(benchmark::State& state)
{
    const GradedPairing phi = sample_pairing();
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_signature(phi, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_BruteSignature)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_IsotypicDims(benchmark::State& state)
{
    const GradedSpace v = GradedSpace::from_degrees({{0, 2}, {1, 2}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(isotypic_dims(v, static_cast<std::size_t>(state.range(0)), Character::trivial));
    }
}
BENCHMARK(BM_IsotypicDims)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Cocycle(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_cocycle(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_Cocycle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
