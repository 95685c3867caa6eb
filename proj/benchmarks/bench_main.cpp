/**************************************************************************
 * bench_main.cpp
 *
 * Copyright 2026 The ooalfsr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <benchmark/benchmark.h>

#include "ooalfsr/construct.hpp"
#include "ooalfsr/field.hpp"
#include "ooalfsr/lfsr.hpp"
#include "ooalfsr/ooa.hpp"
#include "ooalfsr/poly.hpp"
#include "ooalfsr/table1.hpp"

using namespace ooalfsr;

static void BM_FieldMul(benchmark::State& state) {
    const auto F = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
    Elem acc = 1;
    for (auto _ : state) {
        for (Elem x = 1; x < F.order(); ++x) acc = F.mul(acc, x) | 1;
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (F.order() - 1));
}
BENCHMARK(BM_FieldMul)->Arg(16)->Arg(243)->Arg(2187);

static void BM_GeneratePeriod(benchmark::State& state) {
    const auto t = static_cast<unsigned>(state.range(1));
    const auto l = Lfsr::with_impulse_seed(first_primitive_poly(Field::of_order(state.range(0)), t));
    for (auto _ : state) benchmark::DoNotOptimize(generate_period(l));
    state.SetItemsProcessed(state.iterations() * l.period());
}
BENCHMARK(BM_GeneratePeriod)->Args({2, 7})->Args({3, 6})->Args({2, 12});

static void BM_RunsCoverageRank(benchmark::State& state) {
    const auto t = static_cast<unsigned>(state.range(1));
    const auto l = Lfsr::with_impulse_seed(first_primitive_poly(Field::of_order(state.range(0)), t));
    const auto a = build_runs_ooa(l, false);
    for (auto _ : state) benchmark::DoNotOptimize(coverage_ratio(a, CensusMethod::rank));
}
BENCHMARK(BM_RunsCoverageRank)->Args({3, 4})->Args({2, 5})->Unit(benchmark::kMillisecond);

static void BM_RunsCoverageBruteForce(benchmark::State& state) {
    const auto t = static_cast<unsigned>(state.range(1));
    const auto l = Lfsr::with_impulse_seed(first_primitive_poly(Field::of_order(state.range(0)), t));
    const auto a = build_runs_ooa(l, false);
    for (auto _ : state) benchmark::DoNotOptimize(coverage_ratio(a, CensusMethod::brute_force));
}
BENCHMARK(BM_RunsCoverageBruteForce)->Args({3, 4})->Args({2, 5})->Unit(benchmark::kMillisecond);

static void BM_Table1Row(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            table1_stats(static_cast<std::uint32_t>(state.range(0)), static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_Table1Row)->Args({3, 4})->Args({5, 4})->Args({2, 6})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
