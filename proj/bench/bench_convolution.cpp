/*
   Copyright 2026 The polydaehee Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Parallel kernels against their serial references on the coefficient
// shapes the families produce: symbolic MultiPoly series and plain rationals.

#include <benchmark/benchmark.h>

#include "polydaehee/atoms.hpp"
#include "polydaehee/families.hpp"
#include "polydaehee/identities.hpp"
#include "polydaehee/kernels.hpp"

using namespace polydaehee;

namespace {

std::vector<MultiPoly> symbolic(std::size_t order)
{
    const auto s = series_mul(atom_build(atoms::one_plus_x_pow(MultiPoly::variable(Symbol::gamma)), order),
                              atom_build(atoms::exp_linear(MultiPoly::variable(Symbol::eta)), order));
    return {s.coeffs().begin(), s.coeffs().end()};
}

std::vector<MultiPoly> scalar(std::size_t order)
{
    const auto s = atom_build(atoms::log1p_over_polylog(3), order);
    return {s.coeffs().begin(), s.coeffs().end()};
}

template <auto Kernel>
void run_kernel(benchmark::State& state, std::vector<MultiPoly> (*make)(std::size_t))
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto f = make(order);
    const auto g = make(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(std::span<const MultiPoly>(f), std::span<const MultiPoly>(g), order));
    }
}

void BM_cauchy_symbolic(benchmark::State& s) { run_kernel<kernels::cauchy_product<MultiPoly>>(s, symbolic); }
void BM_cauchy_symbolic_serial(benchmark::State& s) { run_kernel<kernels::cauchy_product_serial<MultiPoly>>(s, symbolic); }
void BM_cauchy_scalar(benchmark::State& s) { run_kernel<kernels::cauchy_product<MultiPoly>>(s, scalar); }
void BM_cauchy_scalar_serial(benchmark::State& s) { run_kernel<kernels::cauchy_product_serial<MultiPoly>>(s, scalar); }
void BM_binomial_symbolic(benchmark::State& s) { run_kernel<kernels::binomial_convolution<MultiPoly>>(s, symbolic); }
void BM_binomial_symbolic_serial(benchmark::State& s)
{
    run_kernel<kernels::binomial_convolution_serial<MultiPoly>>(s, symbolic);
}

void BM_suite(benchmark::State& state)
{
    auto grid = default_grid(static_cast<std::size_t>(state.range(0)));
    grid.k = {-1, 2};
    grid.m = {2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite(grid));
    }
}

void BM_suite_serial(benchmark::State& state)
{
    auto grid = default_grid(static_cast<std::size_t>(state.range(0)));
    grid.k = {-1, 2};
    grid.m = {2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite_serial(grid));
    }
}

} // namespace

BENCHMARK(BM_cauchy_symbolic)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cauchy_symbolic_serial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cauchy_scalar)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cauchy_scalar_serial)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_binomial_symbolic)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_binomial_symbolic_serial)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_suite)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_suite_serial)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
