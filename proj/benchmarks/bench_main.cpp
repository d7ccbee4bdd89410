#include "qmz/numeric.hpp"
#include "qmz/qseries.hpp"
#include "qmz/regularize.hpp"
#include "qmz/stuffle.hpp"

#include <benchmark/benchmark.h>

using namespace qmz;

namespace {

const MdfIndex kIndex({2, 1, 2}, {1, 0, 2}, 3);

void BM_DivisorSum(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(mdf_divisor_sum(kIndex, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_DivisorSum)->Arg(25)->Arg(50);

void BM_Polylog(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(mdf_polylog(kIndex, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_Polylog)->Arg(25)->Arg(50);

void BM_Eulerian(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(mdf_eulerian(kIndex, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_Eulerian)->Arg(25)->Arg(50);

void BM_Stuffle(benchmark::State& st)
{
    Word a{{2, 1}, {1, 0}, {1, 1}}, b{{1, 1}, {3, 0}};
    for (auto _ : st)
        benchmark::DoNotOptimize(stuffle(a, b, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_Stuffle)->Arg(2)->Arg(4);

void BM_RegMatrixDet(benchmark::State& st)
{
    RegMatrix r = reg_matrix(static_cast<unsigned>(st.range(0)), static_cast<unsigned>(st.range(1)));
    for (auto _ : st)
        benchmark::DoNotOptimize(determinant(r.entries));
}
BENCHMARK(BM_RegMatrixDet)->Args({2, 3})->Args({3, 2})->Args({4, 2});

void BM_ReduceToQmz(benchmark::State& st)
{
    Word w{{1, 1}, {1, 0}, {2, 1}};
    for (auto _ : st)
        benchmark::DoNotOptimize(reduce_to_qmz(w, 2));
}
BENCHMARK(BM_ReduceToQmz);

void BM_ZetaNumeric(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(zeta_numeric({2, 1}, {1, 0}, 2, static_cast<unsigned long>(st.range(0))));
}
BENCHMARK(BM_ZetaNumeric)->Arg(10000)->Arg(100000);

} // namespace

BENCHMARK_MAIN();
