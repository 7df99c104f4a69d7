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

#include "sinit/presets.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace sinit {

namespace {

constexpr double kEpsilon = 1e-4;

RealMatrix couplings(int n, std::initializer_list<std::tuple<int, int, double>> entries) {
  RealMatrix j = RealMatrix::Zero(n, n);
  for (const auto& [a, b, v] : entries) {
    j(a - 1, b - 1) = v;
    j(b - 1, a - 1) = v;
  }
  return j;
}

Preset bromothiophene() {
  SpinSystem system({-35.0, 35.0}, couplings(2, {{1, 2, 4.0}}), {kEpsilon, kEpsilon});
  RelaxationModel model({5.4, 5.4}, {}, {{{1, 2}, 16.2, std::nullopt}});
  Schedule schedule = two_qubit_schedule({{{1, 2}}, 2000.0, 12.4, LockSequence::cw});
  schedule.name = "2q-bromothiophene";
  return {"2q-bromothiophene",
          "two-qubit register: U1, 12.4 s CW lock at 2 kHz, U2, gradient; target |01>",
          std::move(system),
          std::move(model),
          std::move(schedule),
          {{"shifts_and_couplings", "placeholder values, not measured; replace with real data"}, {"ts_s", "16.2"}, {"t1_s", "5.4 (= ts/3)"}}};
}

Preset acrylonitrile() {
  SpinSystem system({-60.0, 60.0, 420.0}, couplings(3, {{1, 2, 1.0}, {1, 3, 17.9}, {2, 3, 11.8}}),
                    {kEpsilon, kEpsilon, kEpsilon});
  RelaxationModel model({6.0, 6.0, 6.0}, {}, {{{1, 2}, 18.0, std::nullopt}});
  const SpinLockSpec lock{{{1, 2}}, 500.0, 6.3, LockSequence::waltz16};
  Schedule schedule = three_qubit_schedule(lock, lock, 0.96);
  schedule.name = "3q-acrylonitrile";
  schedule.instructions[2].gate_duration_s = 0.060;
  return {"3q-acrylonitrile",
          "three-qubit register: U1 on (1,2), 6.3 s WALTZ-16 lock, cNOT(3->2) f=0.96, second lock, U2, gradient; "
          "target |010>",
          std::move(system),
          std::move(model),
          std::move(schedule),
          {{"shifts_and_couplings", "placeholder values, not measured; replace with real data"},
           {"ts_s", "18"},
           {"t1_s", "6 (= ts/3)"},
           {"cnot_segments", "14"},
           {"cnot_duration_s", "0.060"}}};
}

Preset aspirin() {
  SpinSystem system({-250.0, -190.0, 150.0, 210.0},
                    couplings(4, {{1, 2, 7.8}, {2, 3, 7.6}, {3, 4, 8.0}, {1, 3, 1.6}, {2, 4, 1.2}, {1, 4, 0.4}}),
                    {kEpsilon, kEpsilon, kEpsilon, kEpsilon});
  RelaxationModel model({3.0, 3.0, 3.0, 3.0}, {}, {{{1, 2}, 6.0, std::nullopt}, {{3, 4}, 6.0, std::nullopt}});
  ChainParameters chain;
  chain.num_spins = 4;
  chain.lock_durations_s = {2.0, 4.5};
  chain.lock_amplitude_hz = 2000.0;
  chain.lock_sequence = LockSequence::waltz16;
  chain.cnot_fidelity = 0.94;
  chain.hadamard_fidelity = 0.98;
  chain.hadamard_duration_s = 8.2;
  chain.refocus = true;
  Schedule schedule = chain_schedule(chain);
  schedule.name = "aspirin-4q";
  for (auto& ins : schedule.instructions) {
    if (ins.kind == InstructionKind::cnot) ins.gate_duration_s = 0.061;
  }
  return {"aspirin-4q",
          "four-qubit register: simultaneous lock of (1,2) and (3,4), open cNOTs f=0.94, h f=0.98, second lock, "
          "U2 on (3,4), refocusing NOT on 1 and 2, gradient; target |1001>",
          std::move(system),
          std::move(model),
          std::move(schedule),
          {{"shifts_and_couplings", "placeholder values, not measured; replace with real data"},
           {"ts_s", "6"},
           {"t1_s", "3 (= ts/2)"},
           {"cnot_segments", "20"},
           {"cnot_duration_s", "0.061"},
           {"h_segments", "10"},
           {"h_duration_s", "8.2 (as printed; not used in relaxation)"}}};
}

}  // namespace

std::vector<std::string> preset_names() { return {"2q-bromothiophene", "3q-acrylonitrile", "aspirin-4q"}; }

Preset make_preset(const std::string& name) {
  if (name == "2q-bromothiophene") return bromothiophene();
  if (name == "3q-acrylonitrile") return acrylonitrile();
  if (name == "aspirin-4q") return aspirin();
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown preset '" + name + "' (known: " + known + ")");
}

}  // namespace sinit
