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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sinit/density_matrix.hpp"
#include "sinit/propagators.hpp"
#include "sinit/relaxation.hpp"
#include "sinit/schedule.hpp"

namespace sinit {

enum class StepKind { unitary, noisy_gate, spin_lock, gradient, free_evolution };

struct ProtocolStep {
  StepKind kind = StepKind::gradient;
  std::optional<Propagator> gate;  // unitary and noisy_gate
  double fidelity = 1.0;
  SpinLockSpec lock;
  double duration_s = 0.0;         // free_evolution
  std::string label;
};

struct ProtocolOptions {
  bool strict_gradient = false;   // gradient zeroes every off-diagonal element
  bool relax_spectators = true;   // unlocked spins relax freely during locks
  bool ideal = false;             // all gate fidelities forced to 1, no spectator relaxation
};

struct Snapshot {
  std::string label;
  DensityMatrix state;
};

struct ProtocolResult {
  DensityMatrix final_state;
  std::vector<Snapshot> snapshots;  // starts with the initial state
  std::map<std::string, double> metrics;

  /// Throws std::out_of_range if no snapshot carries `label`.
  const DensityMatrix& snapshot(const std::string& label) const;
};

std::vector<ProtocolStep> compile_schedule(const Schedule& schedule, const SpinSystem& system,
                                           const ProtocolOptions& options = {});

/// Executes the steps; metrics are left empty.
ProtocolResult run_protocol(const DensityMatrix& initial, const std::vector<ProtocolStep>& steps,
                            const RelaxationModel& model, const ProtocolOptions& options = {});

/// Equilibrium -> schedule, with the standard metrics:
///   correlation, diagonal_correlation, eps_prime (against the target),
///   singlet_content_<lock>, singlet_correlation_<lock> per lock snapshot,
///   p0_<cnot>, p1_<cnot> (control populations before each cNOT).
ProtocolResult run_schedule(const SpinSystem& system, const RelaxationModel& model, const Schedule& schedule,
                            const ProtocolOptions& options = {});

/// Model in which every lock of the schedule is a perfect singlet filter.
RelaxationModel ideal_model(const Schedule& schedule);

ProtocolResult initialize_2q(const SpinSystem& system, const RelaxationModel& model, const SpinLockSpec& lock,
                             const ProtocolOptions& options = {});

ProtocolResult prepare_bell(const SpinSystem& system, const RelaxationModel& model, const SpinLockSpec& lock,
                            BellVariant variant, const ProtocolOptions& options = {});

ProtocolResult initialize_3q(const SpinSystem& system, const RelaxationModel& model, const SpinLockSpec& lock1,
                             const SpinLockSpec& lock2, double cnot_fidelity, const ProtocolOptions& options = {});

ProtocolResult initialize_nq(const SpinSystem& system, const RelaxationModel& model, const Schedule& schedule,
                             const ProtocolOptions& options = {});

/// Applies UD; singlet order shows up as antiphase single-quantum signal.
DensityMatrix detect_singlet(const DensityMatrix& rho, const SpinSystem& system, const SpinPair& pair);

}  // namespace sinit
