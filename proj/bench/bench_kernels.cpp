#include "qteich/fields.hpp"
#include "qteich/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace qteich;

namespace {

std::vector<kernels::Word> random_matrix(int n, kernels::Word p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<kernels::Word> d(0, p - 1);
    std::vector<kernels::Word> m(static_cast<size_t>(n) * n);
    for (auto& x : m) x = d(rng);
    return m;
}

template <void (*Kernel)(const kernels::Word*, const kernels::Word*, kernels::Word*, int, kernels::Word)>
void bm_matmul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto p = PrimeField(7).modulus();
    auto A = random_matrix(n, p, 1), B = random_matrix(n, p, 2);
    std::vector<kernels::Word> C(A.size());
    for (auto _ : state) {
        Kernel(A.data(), B.data(), C.data(), n, p);
        benchmark::DoNotOptimize(C.data());
    }
    state.SetItemsProcessed(state.iterations() * int64_t(n) * n * n);
}

template <bool (*Kernel)(kernels::Word*, int, kernels::Word)>
void bm_inverse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto p = PrimeField(7).modulus();
    const auto A = random_matrix(n, p, 3);
    std::vector<kernels::Word> work(A.size());
    for (auto _ : state) {
        work = A;
        benchmark::DoNotOptimize(Kernel(work.data(), n, p));
    }
    state.SetItemsProcessed(state.iterations() * int64_t(n) * n * n);
}

}  // namespace

BENCHMARK(bm_matmul<kernels::matmul_serial>)->Name("matmul/serial")->RangeMultiplier(3)->Range(27, 729);
BENCHMARK(bm_matmul<kernels::matmul_parallel>)->Name("matmul/parallel")->RangeMultiplier(3)->Range(27, 729);
BENCHMARK(bm_inverse<kernels::inverse_serial>)->Name("inverse/serial")->RangeMultiplier(3)->Range(27, 243);
BENCHMARK(bm_inverse<kernels::inverse_parallel>)->Name("inverse/parallel")->RangeMultiplier(3)->Range(27, 243);

BENCHMARK_MAIN();
