// Parallel kernels against their serial references.

#include "hopf/exactla.hpp"
#include "hopf/nck.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hopf;

namespace {

const nck::Algebra& algebra() {
    static const nck::Algebra a;
    return a;
}

la::Matrix random_square(std::size_t n) {
    std::mt19937 rng(static_cast<unsigned>(n));
    std::uniform_int_distribution<long> v(-9, 9);
    la::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v(rng);
    return m;
}

void BM_RrefParallel(benchmark::State& st) {
    const auto m = algebra().reduced_coproduct_matrix(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(la::rref(m));
}

void BM_RrefSerial(benchmark::State& st) {
    const auto m = algebra().reduced_coproduct_matrix(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(la::reference::rref(m));
}

void BM_DeterminantParallel(benchmark::State& st) {
    const auto m = random_square(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(la::determinant(m));
}

void BM_DeterminantSerial(benchmark::State& st) {
    const auto m = random_square(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(la::reference::determinant(m));
}

void BM_CoproductMatrixParallel(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    algebra().basis(n);
    for (auto _ : st) benchmark::DoNotOptimize(algebra().reduced_coproduct_matrix(n));
}

void BM_CoproductMatrixSerial(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    algebra().basis(n);
    for (auto _ : st) benchmark::DoNotOptimize(algebra().reduced_coproduct_matrix_serial(n));
}

}  // namespace

BENCHMARK(BM_RrefParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoproductMatrixParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoproductMatrixSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
