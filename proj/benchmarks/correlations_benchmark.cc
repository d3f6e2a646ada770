// Copyright 2026 The dcesteer Authors
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

#include <sstream>

#include <benchmark/benchmark.h>

#include "dcesteer/correlations.h"
#include "dcesteer/covariance.h"
#include "dcesteer/dce_model.h"
#include "dcesteer/sweep.h"

namespace {

void BM_SymplecticSpectrum(benchmark::State& state) {
  const dcesteer::CovarianceMatrix cm = dcesteer::output_cm(0.02, {8.3e-3, 8.3e-3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dcesteer::symplectic_spectrum(cm));
  }
}
BENCHMARK(BM_SymplecticSpectrum);

void BM_IpExact(benchmark::State& state) {
  const dcesteer::CovarianceMatrix cm = dcesteer::output_cm(0.02, {8.3e-3, 8.3e-3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dcesteer::ip_exact(cm, dcesteer::Probe::A));
  }
}
BENCHMARK(BM_IpExact);

void BM_FullReport(benchmark::State& state) {
  const dcesteer::DceParams p = dcesteer::standard_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dcesteer::full_report(p));
  }
}
BENCHMARK(BM_FullReport);

void BM_CriticalTemperature(benchmark::State& state) {
  const dcesteer::DceParams p = dcesteer::standard_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dcesteer::critical_temperature(p, dcesteer::Measure::Steering));
  }
}
BENCHMARK(BM_CriticalTemperature)->Unit(benchmark::kMicrosecond);

void BM_Figure3Sweep(benchmark::State& state) {
  const dcesteer::SweepSpec spec = dcesteer::figure_preset("fig3");
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::ostringstream out;
    dcesteer::run_sweep(spec, out, threads);
    benchmark::DoNotOptimize(out.str().size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.size()));
}
BENCHMARK(BM_Figure3Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
