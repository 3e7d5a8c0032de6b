// Copyright 2026 The cvpurify Authors
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

#include <numbers>

#include "cvpurify/chi.hpp"
#include "cvpurify/conditioning.hpp"
#include "cvpurify/oracle/fock.hpp"
#include "cvpurify/oracle/quadrature.hpp"
#include "cvpurify/sweep/sweep.hpp"

using namespace cvpurify;

static void BM_closed_form(benchmark::State &state) {
    double tau = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_closed_form({0.5, 0.05, tau}, InteractionKind::BeamSplitter));
        tau += 1e-6;
    }
}
BENCHMARK(BM_closed_form);

static void BM_fidelity_report(benchmark::State &state) {
    const ProtocolParams p{0.5, 0.05, 2.9};
    const GaussianChi4 s = evolve_closed_form(p, InteractionKind::BeamSplitter);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fidelity_report(s, p));
    }
}
BENCHMARK(BM_fidelity_report);

static void BM_sweep_point(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sweep::evaluate_point(InteractionKind::BeamSplitter, false, {0.5, 0.05, 2.9}, sweep::kDefaultReportFloor));
    }
}
BENCHMARK(BM_sweep_point);

static void BM_optimal_time(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep::find_optimal_time(InteractionKind::BeamSplitter, false, 0.5, 0.0,
                                                          {0.1, 2 * std::numbers::pi - 0.1}));
    }
}
BENCHMARK(BM_optimal_time)->Unit(benchmark::kMillisecond);

static void BM_fock_evolution(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const oracle::FockState init = oracle::build_initial_fock(0.5, n);
    for (auto _ : state) {
        // Ten RK4 steps.
        benchmark::DoNotOptimize(oracle::evolve_fock(init, InteractionKind::BeamSplitter, 10 * oracle::kDefaultFockStep));
    }
}
BENCHMARK(BM_fock_evolution)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_quadrature_I(benchmark::State &state) {
    const GaussianChi4 s = evolve_closed_form({0.5, 0.0, 0.4}, InteractionKind::Parametric);
    const int u = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::quadrature_I(s, 0.3, Complex(0, -0.2), u, 1, oracle::QuadratureSpec{16}));
    }
}
BENCHMARK(BM_quadrature_I)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
