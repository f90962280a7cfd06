// Copyright 2026 The symdetect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "symdetect/centre.h"
#include "symdetect/characters.h"
#include "symdetect/detection.h"
#include "symdetect/holographic.h"
#include "symdetect/qpe.h"

namespace symdetect {
namespace {

// Characters are cached process-wide, so a fresh table still hits warm entries
// after the first iteration. The first-iteration cost dominates for small n.
void BM_CharacterTable(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CharacterTable table(n);
        for (std::size_t c = 0; c < table.size(); ++c) benchmark::DoNotOptimize(table.column(c).data());
    }
    state.counters["classes"] = static_cast<double>(partitions(n).size());
}
BENCHMARK(BM_CharacterTable)->DenseRange(6, 16, 2);

void BM_SignatureTable(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const int k = k_star(n);
    for (auto _ : state) {
        SignatureTable table(n, k);
        benchmark::DoNotOptimize(table.collision_free());
    }
}
BENCHMARK(BM_SignatureTable)->Arg(10)->Arg(20)->Arg(30);

void BM_QpeRun(benchmark::State &state) {
    const int t = static_cast<int>(state.range(0));
    DiagonalUnitary u({1.0 / 3.0, 0.25, 0.6});
    std::vector<std::complex<double>> system{{0.6, 0.0}, {0.0, 0.8}, {0.0, 0.0}};
    for (auto _ : state) {
        QpeOutcome qo = qpe_run(u, system, t);
        benchmark::DoNotOptimize(qo.distribution.data());
    }
}
BENCHMARK(BM_QpeRun)->DenseRange(4, 12, 4);

void BM_DetectProjector(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Partition r = partitions(n)[partitions(n).size() / 2];
    std::uint64_t seed = 1;
    for (auto _ : state) {
        DetectionResult res = detect_projector(r, seed++);
        benchmark::DoNotOptimize(res.label);
    }
}
BENCHMARK(BM_DetectProjector)->DenseRange(4, 8, 2);

std::vector<std::complex<double>> ramp(std::size_t size) {
    std::vector<std::complex<double>> v(size);
    for (std::size_t i = 0; i < size; ++i) v[i] = {std::cos(0.1 * i), std::sin(0.3 * i)};
    return v;
}

void BM_Fft(benchmark::State &state) {
    const auto input = ramp(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto data = input;
        OpCount ops;
        fft_radix2(data, ops);
        benchmark::DoNotOptimize(data.data());
    }
}
BENCHMARK(BM_Fft)->RangeMultiplier(4)->Range(64, 4096);

void BM_DirectDft(benchmark::State &state) {
    const auto input = ramp(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto data = input;
        OpCount ops;
        direct_dft(data, ops);
        benchmark::DoNotOptimize(data.data());
    }
}
BENCHMARK(BM_DirectDft)->RangeMultiplier(4)->Range(64, 4096);

void BM_HolographicRoundTrip(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const Partition r = partitions(n).back();
    for (auto _ : state) {
        RoundTrip rt = holographic_roundtrip(r, n + 1);
        benchmark::DoNotOptimize(rt.recovered);
    }
}
BENCHMARK(BM_HolographicRoundTrip)->DenseRange(4, 12, 4);

}  // namespace
}  // namespace symdetect

// The packaged benchmark_main archive carries LTO bytecode from another compiler release.
BENCHMARK_MAIN();
