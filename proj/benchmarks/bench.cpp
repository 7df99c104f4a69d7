// Copyright 2026 The sinit Authors
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

#include "sinit/hamiltonian.hpp"
#include "sinit/presets.hpp"
#include "sinit/propagators.hpp"
#include "sinit/protocols.hpp"
#include "sinit/relaxation.hpp"
#include "sinit/states.hpp"

using namespace sinit;

namespace {

SpinSystem chain(int n) {
  RealMatrix c = RealMatrix::Zero(n, n);
  std::vector<double> shifts;
  for (int a = 0; a < n; ++a) {
    shifts.push_back(-200.0 + 70.0 * a);
    if (a + 1 < n) c(a, a + 1) = c(a + 1, a) = 6.0;
  }
  return SpinSystem(shifts, c, std::vector<double>(static_cast<std::size_t>(n), 1e-4));
}

void BM_Propagate(benchmark::State& state) {
  const auto s = chain(static_cast<int>(state.range(0)));
  const Hamiltonian h = zeeman_hamiltonian(s);
  for (auto _ : state) benchmark::DoNotOptimize(propagate(h, 0.0123));
}
BENCHMARK(BM_Propagate)->DenseRange(2, 8, 2);

void BM_SpinLock(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = chain(n);
  std::vector<SingletDecay> pairs;
  std::vector<SpinPair> locked;
  for (int k = 1; k + 1 <= n; k += 2) {
    pairs.push_back({{k, k + 1}, 10.0, std::nullopt});
    locked.push_back({k, k + 1});
  }
  const RelaxationModel model(std::vector<double>(static_cast<std::size_t>(n), 3.0), {}, pairs);
  const SpinLockSpec lock{locked, 2000.0, 4.0, LockSequence::waltz16};
  const DensityMatrix rho = equilibrium_state(s);
  for (auto _ : state) benchmark::DoNotOptimize(spin_lock(rho, lock, model));
}
BENCHMARK(BM_SpinLock)->DenseRange(2, 8, 2);

void BM_Preset(benchmark::State& state, const char* name) {
  const auto p = make_preset(name);
  for (auto _ : state) benchmark::DoNotOptimize(run_schedule(p.system, p.model, p.schedule));
}
BENCHMARK_CAPTURE(BM_Preset, two_qubit, "2q-bromothiophene");
BENCHMARK_CAPTURE(BM_Preset, three_qubit, "3q-acrylonitrile");
BENCHMARK_CAPTURE(BM_Preset, four_qubit, "aspirin-4q");

}  // namespace

BENCHMARK_MAIN();
