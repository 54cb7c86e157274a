#include "hrep/config.hpp"
#include "hrep/kernels.hpp"
#include "hrep/words.hpp"

#include <benchmark/benchmark.h>

using namespace hrep;

namespace {

RepMatrix long_product(int m, int n, bool parallel) {
    GeneratorSet g = assemble_generators_serial(m, n, active_calibration());
    std::vector<const RepMatrix*> f;
    for (int r = 0; r < 3; ++r)
        for (auto& A : g.pos)
            f.push_back(&A);
    return chain_product(f, parallel);
}

void BM_matmul_serial(benchmark::State& st) {
    GeneratorSet g = assemble_generators_serial(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)),
                                                active_calibration());
    RepMatrix a = g.pos[0] * g.pos[1], b = g.pos[1] * g.pos[0];
    for (auto _ : st)
        benchmark::DoNotOptimize(matmul_serial(a, b));
}

void BM_matmul_parallel(benchmark::State& st) {
    GeneratorSet g = assemble_generators_serial(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)),
                                                active_calibration());
    RepMatrix a = g.pos[0] * g.pos[1], b = g.pos[1] * g.pos[0];
    for (auto _ : st)
        benchmark::DoNotOptimize(matmul_parallel(a, b));
}

void BM_chain(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(long_product(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), st.range(2)));
}

void BM_assemble_serial(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(assemble_generators_serial(static_cast<int>(st.range(0)),
                                                            static_cast<int>(st.range(1)), active_calibration()));
}

void BM_assemble_parallel(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(assemble_generators_parallel(static_cast<int>(st.range(0)),
                                                              static_cast<int>(st.range(1)), active_calibration()));
}

}  // namespace

BENCHMARK(BM_matmul_serial)->Args({2, 7})->Args({3, 6})->Args({4, 6});
BENCHMARK(BM_matmul_parallel)->Args({2, 7})->Args({3, 6})->Args({4, 6});
BENCHMARK(BM_chain)->Args({3, 6, 0})->Args({3, 6, 1});
BENCHMARK(BM_assemble_serial)->Args({3, 6})->Args({4, 7});
BENCHMARK(BM_assemble_parallel)->Args({3, 6})->Args({4, 7});

BENCHMARK_MAIN();
