#include <benchmark/benchmark.h>

#include <cmath>

#include "dfdm/diff_matrix.hpp"
#include "dfdm/operator.hpp"
#include "dfdm/reference.hpp"

namespace {

dfdm::GridFunction gaussian(int n, dfdm::Precision p) {
    return dfdm::sample([](double x) { return std::exp(-(x - 3.14159) * (x - 3.14159) / 0.3); },
                        dfdm::make_grid(n), p);
}

void BM_Stencil(benchmark::State& state) {
    const auto f = gaussian(static_cast<int>(state.range(0)), dfdm::Precision::bits64);
    const auto coeffs = dfdm::build_coeffs(f.grid());
    for (auto _ : state) benchmark::DoNotOptimize(dfdm::apply_dfdm_stencil(f, coeffs));
    state.SetComplexityN(state.range(0));
}

void BM_Direct(benchmark::State& state) {
    const auto f = gaussian(static_cast<int>(state.range(0)), dfdm::Precision::bits64);
    for (auto _ : state) benchmark::DoNotOptimize(dfdm::apply_dfdm_direct(f));
    state.SetComplexityN(state.range(0));
}

void BM_Matrix(benchmark::State& state) {
    const auto f = gaussian(static_cast<int>(state.range(0)), dfdm::Precision::bits64);
    const auto m = dfdm::assemble_dfdm_matrix(f.grid(), dfdm::build_coeffs(f.grid()));
    for (auto _ : state) benchmark::DoNotOptimize(dfdm::apply_matrix(m, f));
    state.SetComplexityN(state.range(0));
}

void BM_Assemble(benchmark::State& state) {
    const auto grid = dfdm::make_grid(static_cast<int>(state.range(0)));
    const auto coeffs = dfdm::build_coeffs(grid);
    for (auto _ : state) benchmark::DoNotOptimize(dfdm::assemble_dfdm_matrix(grid, coeffs));
}

void BM_Fft(benchmark::State& state) {
    const auto f = gaussian(static_cast<int>(state.range(0)), dfdm::Precision::bits64);
    for (auto _ : state) benchmark::DoNotOptimize(dfdm::dft_derivative(f));
    state.SetComplexityN(state.range(0));
}

void BM_StencilFloat(benchmark::State& state) {
    const auto f = gaussian(static_cast<int>(state.range(0)), dfdm::Precision::bits32);
    const auto coeffs = dfdm::build_coeffs(f.grid());
    for (auto _ : state) benchmark::DoNotOptimize(dfdm::apply_dfdm_stencil(f, coeffs));
}

}  // namespace

BENCHMARK(BM_Stencil)->RangeMultiplier(4)->Range(32, 2048)->Complexity();
BENCHMARK(BM_Direct)->RangeMultiplier(4)->Range(32, 2048)->Complexity();
BENCHMARK(BM_Matrix)->RangeMultiplier(4)->Range(32, 2048)->Complexity();
BENCHMARK(BM_Assemble)->RangeMultiplier(4)->Range(32, 512);
BENCHMARK(BM_Fft)->RangeMultiplier(4)->Range(32, 4096)->Complexity();
BENCHMARK(BM_StencilFloat)->Arg(512)->Arg(2048);
