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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sinit/propagators.hpp"
#include "sinit/relaxation.hpp"

namespace sinit {

enum class InstructionKind {
  prepare_singlet,  // U1 on each listed pair
  lock,             // simultaneous spin-lock of the listed pairs
  convert,          // U2 on each listed pair
  cnot,
  hadamard,
  not_gate,
  bell,
  gradient,
  delay,            // relaxation-only free evolution of all spins
};

std::string to_string(InstructionKind kind);
InstructionKind parse_instruction_kind(const std::string& name);

struct Instruction {
  InstructionKind kind = InstructionKind::gradient;
  std::vector<SpinPair> pairs;
  std::vector<int> spins;  // cnot: {control, target}; hadamard: {spin}; not_gate: targets
  ControlPolarity polarity = ControlPolarity::on_one;
  BellVariant bell = BellVariant::psi_plus;
  double fidelity = 1.0;
  double duration_s = 0.0;       // lock and delay only
  double amplitude_hz = 0.0;     // lock metadata
  LockSequence sequence = LockSequence::cw;
  double gate_duration_s = 0.0;  // metadata, never enters relaxation
  std::string label;

  static Instruction prepare_singlet(std::vector<SpinPair> pairs);
  static Instruction lock(std::vector<SpinPair> pairs, double duration_s, double amplitude_hz, LockSequence seq);
  static Instruction convert(SpinPair pair);
  static Instruction controlled_not(int control, int target, ControlPolarity polarity, double fidelity = 1.0);
  static Instruction hadamard(int spin, double fidelity = 1.0);
  static Instruction flip(std::vector<int> spins);
  static Instruction bell_rotation(SpinPair pair, BellVariant variant);
  static Instruction gradient();
  static Instruction delay(double duration_s);
};

struct Schedule {
  std::string name;
  int num_spins = 0;
  std::vector<Instruction> instructions;
  std::size_t target = 0;  // computational-basis index of the intended pseudopure state
  std::optional<Vector> target_state;  // pure target ket; overrides `target` when set
  std::map<std::string, std::string> metadata;
};

/// Throws std::invalid_argument("inconsistent schedule: ...") on any breach.
void validate_schedule(const Schedule& schedule);

/// Every pair that some lock instruction references, in first-use order.
std::vector<SpinPair> locked_pairs(const Schedule& schedule);

struct ChainParameters {
  int num_spins = 2;
  /// One entry per stage: stage 0 locks every pair, stage k locks pairs k+1..n/2.
  std::vector<double> lock_durations_s{0.0};
  double lock_amplitude_hz = 0.0;
  LockSequence lock_sequence = LockSequence::cw;
  double cnot_fidelity = 1.0;
  double hadamard_fidelity = 1.0;
  double hadamard_duration_s = 0.0;  // metadata
  bool refocus = false;              // NOT on spins 1 and 2 before the gradient
};

/// Pair-chain initialization for even n. For n = 2 this is U1, lock, U2, gradient.
Schedule chain_schedule(const ChainParameters& params);

Schedule two_qubit_schedule(const SpinLockSpec& lock);

Schedule three_qubit_schedule(const SpinLockSpec& lock1, const SpinLockSpec& lock2, double cnot_fidelity);

Schedule bell_schedule(const SpinLockSpec& lock, BellVariant variant);

}  // namespace sinit
