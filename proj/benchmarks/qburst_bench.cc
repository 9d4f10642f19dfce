// Copyright 2026 The qburst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "qburst/cyclic_code.h"
#include "qburst/galois.h"
#include "qburst/notation.h"
#include "qburst/qcc_burst.h"
#include "qburst/qetd.h"
#include "qburst/qrs_burst.h"

namespace {

using namespace qburst;

QuantumCyclicCode herm13() {
    return QuantumCyclicCode::hermitian(
        CyclicCode::from_generator(13, parse_generator("(1^6 2^5 3^3 2^1 1^0)", FieldSpec::gf4())));
}

void BM_FieldMul(benchmark::State &state) {
    Field f = FieldSpec::make(static_cast<int>(state.range(0)));
    std::mt19937 rng(1);
    std::vector<Symbol> xs(1024);
    for (auto &x : xs) x = rng() % f->q();
    Symbol acc = 1;
    for (auto _ : state) {
        for (Symbol x : xs) acc = f->mul(acc ^ x, x) | 1;
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(6)->Arg(8);

void BM_FactorXnMinus1(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_xn_minus_1(n, FieldSpec::gf4()));
    }
}
BENCHMARK(BM_FactorXnMinus1)->Arg(63)->Arg(91);

void BM_Algorithm1(benchmark::State &state) {
    QuantumCyclicCode q = herm13();
    for (auto _ : state) {
        benchmark::DoNotOptimize(algorithm1(q));
    }
}
BENCHMARK(BM_Algorithm1);

void BM_Algorithm2(benchmark::State &state) {
    RsCode rs = RsCode::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(algorithm2(rs));
    }
}
BENCHMARK(BM_Algorithm2)->Args({4, 5})->Args({5, 15})->Args({6, 33});

void BM_QetdDecode(benchmark::State &state) {
    QuantumCyclicCode q = herm13();
    const CyclicCode &c = q.c1();
    std::mt19937 rng(3);
    std::vector<Vec> syndromes(256);
    for (auto &s : syndromes) {
        s.resize(c.r());
        for (auto &x : s) x = rng() % 4;
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qetd_decode(syndromes[i++ % syndromes.size()], c));
    }
}
BENCHMARK(BM_QetdDecode);

void BM_QetdStats(benchmark::State &state) {
    QuantumCyclicCode q = herm13();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qetd_stats(q, std::nullopt, QetdMode::kAuto, 1));
    }
}
BENCHMARK(BM_QetdStats)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
