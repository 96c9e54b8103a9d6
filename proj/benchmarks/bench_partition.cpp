#include <benchmark/benchmark.h>

#include "sylvester/number_theory.hpp"
#include "sylvester/scalar_partition.hpp"
#include "sylvester/vector_partition.hpp"

namespace {

using namespace sylvester;

IntMatrix matrix_2x4() {
    IntMatrix m(2, 4);
    const std::int64_t rows[2][4] = {{1, 2, 1, 0}, {1, 1, 0, 1}};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
    return m;
}

IntMatrix matrix_3x4() {
    IntMatrix m(3, 4);
    const std::int64_t rows[3][4] = {{2, 1, 0, 0}, {0, 1, 1, 2}, {0, 0, 1, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
    return m;
}

void BM_scalar_quasipoly(benchmark::State& state) {
    const PartList parts{{6, 10, 15}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partition_quasipoly(parts));
    }
}
BENCHMARK(BM_scalar_quasipoly);

void BM_scalar_evaluate(benchmark::State& state) {
    const QuasiPoly1D quasi = partition_quasipoly({{6, 10, 15}});
    std::int64_t s = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_quasipoly(quasi, s));
        s = (s + 1) % 1000;
    }
}
BENCHMARK(BM_scalar_evaluate);

void BM_decompose_2x4(benchmark::State& state) {
    const MatrixSpec spec = MatrixSpec::validate(matrix_2x4());
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(spec));
    }
}
BENCHMARK(BM_decompose_2x4);

void BM_decompose_3x4(benchmark::State& state) {
    const MatrixSpec spec = MatrixSpec::validate(matrix_3x4());
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(spec));
    }
}
BENCHMARK(BM_decompose_3x4);

void BM_evaluate_2x4(benchmark::State& state) {
    const MatrixSpec spec = MatrixSpec::validate(matrix_2x4());
    const VectorWaveDecomposition decomp = decompose(spec);
    const std::vector<GaussianRational> alpha{GaussianRational(1),
                                              GaussianRational(BigRational(-1), BigRational(1))};
    const std::vector<std::int64_t> s{7, 5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(decomp, s, alpha));
    }
}
BENCHMARK(BM_evaluate_2x4);

void BM_brute_vector_2x4(benchmark::State& state) {
    const MatrixSpec spec = MatrixSpec::validate(matrix_2x4());
    const std::vector<std::int64_t> s{12, 12};
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_vector_count(s, spec));
    }
}
BENCHMARK(BM_brute_vector_2x4);

void BM_circulator(benchmark::State& state) {
    std::int64_t j = 1, s = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(prime_circulator(j, s));
        j = j % 36 + 1;
        s = (s + 7) % 101 - 50;
    }
}
BENCHMARK(BM_circulator);

}  // namespace

BENCHMARK_MAIN();
