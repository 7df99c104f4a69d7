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

#include "sinit/schedule.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "sinit/states.hpp"

namespace sinit {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw std::invalid_argument("inconsistent schedule: " + what);
}

SpinLockSpec default_pair_lock(const SpinLockSpec& lock) {
  SpinLockSpec out = lock;
  if (out.pairs.empty()) out.pairs = {{1, 2}};
  return out;
}

Instruction lock_from(const SpinLockSpec& spec) {
  return Instruction::lock(spec.pairs, spec.duration_s, spec.amplitude_hz, spec.sequence);
}

}  // namespace

std::string to_string(InstructionKind kind) {
  switch (kind) {
    case InstructionKind::prepare_singlet:
      return "prepare_singlet";
    case InstructionKind::lock:
      return "lock";
    case InstructionKind::convert:
      return "convert";
    case InstructionKind::cnot:
      return "cnot";
    case InstructionKind::hadamard:
      return "hadamard";
    case InstructionKind::not_gate:
      return "not";
    case InstructionKind::bell:
      return "bell";
    case InstructionKind::gradient:
      return "gradient";
    case InstructionKind::delay:
      return "delay";
  }
  throw std::invalid_argument("unknown instruction kind");
}

InstructionKind parse_instruction_kind(const std::string& name) {
  for (auto k : {InstructionKind::prepare_singlet, InstructionKind::lock, InstructionKind::convert, InstructionKind::cnot,
                 InstructionKind::hadamard, InstructionKind::not_gate, InstructionKind::bell, InstructionKind::gradient,
                 InstructionKind::delay}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown instruction '" + name + "'");
}

Instruction Instruction::prepare_singlet(std::vector<SpinPair> pairs) {
  Instruction i;
  i.kind = InstructionKind::prepare_singlet;
  i.pairs = std::move(pairs);
  return i;
}

Instruction Instruction::lock(std::vector<SpinPair> pairs, double duration_s, double amplitude_hz, LockSequence seq) {
  Instruction i;
  i.kind = InstructionKind::lock;
  i.pairs = std::move(pairs);
  i.duration_s = duration_s;
  i.amplitude_hz = amplitude_hz;
  i.sequence = seq;
  return i;
}

Instruction Instruction::convert(SpinPair pair) {
  Instruction i;
  i.kind = InstructionKind::convert;
  i.pairs = {pair};
  return i;
}

Instruction Instruction::controlled_not(int control, int target, ControlPolarity polarity, double fidelity) {
  Instruction i;
  i.kind = InstructionKind::cnot;
  i.spins = {control, target};
  i.polarity = polarity;
  i.fidelity = fidelity;
  return i;
}

Instruction Instruction::hadamard(int spin, double fidelity) {
  Instruction i;
  i.kind = InstructionKind::hadamard;
  i.spins = {spin};
  i.fidelity = fidelity;
  return i;
}

Instruction Instruction::flip(std::vector<int> spins) {
  Instruction i;
  i.kind = InstructionKind::not_gate;
  i.spins = std::move(spins);
  return i;
}

Instruction Instruction::bell_rotation(SpinPair pair, BellVariant variant) {
  Instruction i;
  i.kind = InstructionKind::bell;
  i.pairs = {pair};
  i.bell = variant;
  return i;
}

Instruction Instruction::gradient() { return Instruction{}; }

Instruction Instruction::delay(double duration_s) {
  Instruction i;
  i.kind = InstructionKind::delay;
  i.duration_s = duration_s;
  return i;
}

void validate_schedule(const Schedule& s) {
  if (s.num_spins < 1 || s.num_spins > kMaxSpins) inconsistent("register size must be 1..8");
  if (s.instructions.empty()) inconsistent("no instructions");
  if (s.target >= (std::size_t{1} << s.num_spins)) inconsistent("target index outside the register");
  if (s.target_state && s.target_state->size() != (Eigen::Index{1} << s.num_spins)) {
    inconsistent("target state dimension does not match the register");
  }
  const int n = s.num_spins;
  const auto spin_ok = [n](int j) { return j >= 1 && j <= n; };
  for (std::size_t k = 0; k < s.instructions.size(); ++k) {
    const auto& ins = s.instructions[k];
    const std::string where = "instruction " + std::to_string(k + 1) + " (" + to_string(ins.kind) + ")";
    std::set<int> used;
    for (const auto& p : ins.pairs) {
      if (!spin_ok(p.first) || !spin_ok(p.second) || p.first == p.second) inconsistent(where + ": bad pair " + to_string(p));
      if (!used.insert(p.first).second || !used.insert(p.second).second) inconsistent(where + ": pairs overlap");
    }
    for (int j : ins.spins) {
      if (!spin_ok(j)) inconsistent(where + ": spin " + std::to_string(j) + " out of range");
    }
    if (!(ins.fidelity > 0.0 && ins.fidelity <= 1.0)) inconsistent(where + ": fidelity must lie in (0, 1]");
    if (!(ins.duration_s >= 0.0) || !std::isfinite(ins.duration_s)) inconsistent(where + ": negative duration");
    switch (ins.kind) {
      case InstructionKind::prepare_singlet:
      case InstructionKind::lock:
        if (ins.pairs.empty()) inconsistent(where + ": needs at least one pair");
        break;
      case InstructionKind::convert:
      case InstructionKind::bell:
        if (ins.pairs.size() != 1) inconsistent(where + ": needs exactly one pair");
        break;
      case InstructionKind::cnot:
        if (ins.spins.size() != 2 || ins.spins[0] == ins.spins[1]) inconsistent(where + ": needs distinct control and target");
        break;
      case InstructionKind::hadamard:
        if (ins.spins.size() != 1) inconsistent(where + ": needs exactly one spin");
        break;
      case InstructionKind::not_gate: {
        if (ins.spins.empty()) inconsistent(where + ": needs at least one spin");
        std::set<int> u(ins.spins.begin(), ins.spins.end());
        if (u.size() != ins.spins.size()) inconsistent(where + ": repeated spin");
        break;
      }
      case InstructionKind::gradient:
      case InstructionKind::delay:
        break;
    }
  }
}

std::vector<SpinPair> locked_pairs(const Schedule& schedule) {
  std::vector<SpinPair> out;
  for (const auto& ins : schedule.instructions) {
    if (ins.kind != InstructionKind::lock) continue;
    for (const auto& p : ins.pairs) {
      bool seen = false;
      for (const auto& q : out) seen = seen || q == p;
      if (!seen) out.push_back(p);
    }
  }
  return out;
}

Schedule chain_schedule(const ChainParameters& params) {
  const int n = params.num_spins;
  if (n < 2 || n % 2 != 0 || n > kMaxSpins) inconsistent("pair chain needs an even register of 2..8 spins");
  const int pairs = n / 2;
  if (static_cast<int>(params.lock_durations_s.size()) != pairs) {
    inconsistent("pair chain on " + std::to_string(n) + " spins needs " + std::to_string(pairs) + " lock durations");
  }
  const auto pair_k = [](int k) { return SpinPair{2 * k - 1, 2 * k}; };
  const auto pairs_from = [&](int first) {
    std::vector<SpinPair> v;
    for (int k = first; k <= pairs; ++k) v.push_back(pair_k(k));
    return v;
  };

  Schedule s;
  s.name = "chain-" + std::to_string(n) + "q";
  s.num_spins = n;
  s.instructions.push_back(Instruction::prepare_singlet(pairs_from(1)));
  s.instructions.push_back(
      Instruction::lock(pairs_from(1), params.lock_durations_s[0], params.lock_amplitude_hz, params.lock_sequence));
  for (int k = 1; k < pairs; ++k) {
    // |S0> on pair k -> |01> via open cNOT and h; the second open cNOT
    // then fires only on the residual branch, handing it to pair k+1.
    s.instructions.push_back(Instruction::controlled_not(2 * k, 2 * k - 1, ControlPolarity::on_zero, params.cnot_fidelity));
    auto h = Instruction::hadamard(2 * k, params.hadamard_fidelity);
    h.gate_duration_s = params.hadamard_duration_s;
    s.instructions.push_back(h);
    s.instructions.push_back(Instruction::controlled_not(2 * k, 2 * k + 1, ControlPolarity::on_zero, params.cnot_fidelity));
    s.instructions.push_back(Instruction::lock(pairs_from(k + 1), params.lock_durations_s[static_cast<std::size_t>(k)],
                                               params.lock_amplitude_hz, params.lock_sequence));
  }
  s.instructions.push_back(Instruction::convert(pair_k(pairs)));
  if (params.refocus) s.instructions.push_back(Instruction::flip({1, 2}));
  s.instructions.push_back(Instruction::gradient());

  // Every pair ends in |01>; the refocusing flip turns pair 1 into |10>.
  std::size_t target = 0;
  for (int k = 1; k <= pairs; ++k) {
    const bool flipped = params.refocus && k == 1;
    target = (target << 2) | (flipped ? 0b10U : 0b01U);
  }
  s.target = target;
  validate_schedule(s);
  return s;
}

Schedule two_qubit_schedule(const SpinLockSpec& lock) {
  const auto l = default_pair_lock(lock);
  Schedule s;
  s.name = "two-qubit";
  s.num_spins = 2;
  s.instructions = {Instruction::prepare_singlet({{1, 2}}), lock_from(l), Instruction::convert({1, 2}),
                    Instruction::gradient()};
  s.target = 0b01;
  validate_schedule(s);
  return s;
}

Schedule three_qubit_schedule(const SpinLockSpec& lock1, const SpinLockSpec& lock2, double cnot_fidelity) {
  Schedule s;
  s.name = "three-qubit";
  s.num_spins = 3;
  s.instructions = {Instruction::prepare_singlet({{1, 2}}),
                    lock_from(default_pair_lock(lock1)),
                    Instruction::controlled_not(3, 2, ControlPolarity::on_one, cnot_fidelity),
                    lock_from(default_pair_lock(lock2)),
                    Instruction::convert({1, 2}),
                    Instruction::gradient()};
  s.target = 0b010;
  validate_schedule(s);
  return s;
}

Schedule bell_schedule(const SpinLockSpec& lock, BellVariant variant) {
  Schedule s;
  s.name = "bell-" + to_string(variant);
  s.num_spins = 2;
  s.instructions = {Instruction::prepare_singlet({{1, 2}}), lock_from(default_pair_lock(lock)),
                    Instruction::bell_rotation({1, 2}, variant)};
  s.target = 0;
  const BellState bs = variant == BellVariant::psi_plus  ? BellState::psi_plus
                       : variant == BellVariant::phi_plus ? BellState::phi_plus
                                                          : BellState::phi_minus;
  s.target_state = bell_state(bs);
  validate_schedule(s);
  return s;
}

}  // namespace sinit
