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

#include "sinit/protocols.hpp"

#include <array>
#include <set>
#include <stdexcept>

#include "sinit/analysis.hpp"
#include "sinit/states.hpp"

namespace sinit {

namespace {

Propagator product_over_pairs(const std::vector<SpinPair>& pairs, const SpinSystem& system,
                              Propagator (*make)(const SpinSystem&, const SpinPair&), const std::string& name) {
  Propagator u = Propagator::identity(system.size());
  std::string label = name;
  for (const auto& p : pairs) {
    u = make(system, p) * u;
    label += to_string(p);
  }
  return Propagator(u.matrix(), label);
}

ProtocolStep gate_step(Propagator u, double fidelity, const ProtocolOptions& options, std::string label) {
  ProtocolStep step;
  const double f = options.ideal ? 1.0 : fidelity;
  step.kind = f < 1.0 ? StepKind::noisy_gate : StepKind::unitary;
  step.gate = std::move(u);
  step.fidelity = f;
  step.label = std::move(label);
  return step;
}

Matrix target_matrix(const Schedule& s) {
  if (s.target_state) return (*s.target_state) * s.target_state->adjoint();
  return pseudopure_state(s.target, s.num_spins, 1.0).matrix();
}

void require_size(const SpinSystem& system, int n, const char* what) {
  if (system.size() != n) {
    throw std::invalid_argument(std::string(what) + " needs a " + std::to_string(n) + "-spin register, got " +
                                std::to_string(system.size()));
  }
}

}  // namespace

const DensityMatrix& ProtocolResult::snapshot(const std::string& label) const {
  for (const auto& s : snapshots) {
    if (s.label == label) return s.state;
  }
  throw std::out_of_range("no snapshot labelled '" + label + "'");
}

std::vector<ProtocolStep> compile_schedule(const Schedule& schedule, const SpinSystem& system,
                                           const ProtocolOptions& options) {
  validate_schedule(schedule);
  if (system.size() != schedule.num_spins) {
    throw std::invalid_argument("inconsistent schedule: written for " + std::to_string(schedule.num_spins) +
                                " spins, system has " + std::to_string(system.size()));
  }
  std::map<InstructionKind, int> counters;
  std::vector<ProtocolStep> steps;
  for (const auto& ins : schedule.instructions) {
    const int count = ++counters[ins.kind];
    std::string label = ins.label.empty() ? to_string(ins.kind) + std::to_string(count) : ins.label;
    switch (ins.kind) {
      case InstructionKind::prepare_singlet:
        steps.push_back(gate_step(product_over_pairs(ins.pairs, system, u1_singlet_preparation, "U1"), 1.0, options,
                                  std::move(label)));
        break;
      case InstructionKind::convert:
        steps.push_back(gate_step(product_over_pairs(ins.pairs, system, u2_singlet_to_pseudopure, "U2"), 1.0, options,
                                  std::move(label)));
        break;
      case InstructionKind::lock: {
        ProtocolStep step;
        step.kind = StepKind::spin_lock;
        step.lock = SpinLockSpec{ins.pairs, ins.amplitude_hz, ins.duration_s, ins.sequence};
        step.label = std::move(label);
        steps.push_back(std::move(step));
        break;
      }
      case InstructionKind::cnot:
        steps.push_back(gate_step(cnot(system, ins.spins[0], ins.spins[1], ins.polarity), ins.fidelity, options,
                                  std::move(label)));
        break;
      case InstructionKind::hadamard:
        steps.push_back(gate_step(pseudo_hadamard(system, ins.spins[0]), ins.fidelity, options, std::move(label)));
        break;
      case InstructionKind::not_gate:
        steps.push_back(gate_step(not_gate(system, ins.spins), ins.fidelity, options, std::move(label)));
        break;
      case InstructionKind::bell:
        steps.push_back(gate_step(bell_rotation(system, ins.pairs[0], ins.bell), ins.fidelity, options, std::move(label)));
        break;
      case InstructionKind::gradient: {
        ProtocolStep step;
        step.kind = StepKind::gradient;
        step.label = std::move(label);
        steps.push_back(std::move(step));
        break;
      }
      case InstructionKind::delay: {
        ProtocolStep step;
        step.kind = StepKind::free_evolution;
        step.duration_s = ins.duration_s;
        step.label = std::move(label);
        steps.push_back(std::move(step));
        break;
      }
    }
  }
  return steps;
}

ProtocolResult run_protocol(const DensityMatrix& initial, const std::vector<ProtocolStep>& steps,
                            const RelaxationModel& model, const ProtocolOptions& options) {
  const int n = initial.num_spins();
  ProtocolResult result{initial, {{"equilibrium", initial}}, {}};
  DensityMatrix rho = initial;
  for (const auto& step : steps) {
    switch (step.kind) {
      case StepKind::unitary:
        rho = apply(*step.gate, rho);
        break;
      case StepKind::noisy_gate:
        rho = noisy_gate(rho, *step.gate, step.fidelity);
        break;
      case StepKind::spin_lock: {
        rho = spin_lock(rho, step.lock, model);
        if (options.relax_spectators && !options.ideal) {
          std::set<int> locked;
          for (const auto& p : step.lock.pairs) locked.insert({p.first, p.second});
          std::vector<int> free;
          for (int j = 1; j <= n; ++j) {
            if (!locked.count(j)) free.push_back(j);
          }
          rho = free_relaxation(rho, step.lock.duration_s, model, free);
        }
        break;
      }
      case StepKind::gradient:
        rho = gradient_crush(rho, options.strict_gradient ? CrushMode::strict : CrushMode::coherence_order);
        break;
      case StepKind::free_evolution:
        rho = free_relaxation(rho, step.duration_s, model);
        break;
    }
    result.snapshots.push_back({step.label, rho});
  }
  result.final_state = rho;
  return result;
}

ProtocolResult run_schedule(const SpinSystem& system, const RelaxationModel& model, const Schedule& schedule,
                            const ProtocolOptions& options) {
  if (model.size() != system.size()) throw std::invalid_argument("relaxation model size does not match the system");
  const auto steps = compile_schedule(schedule, system, options);
  ProtocolResult result = run_protocol(equilibrium_state(system), steps, model, options);

  const Matrix target = target_matrix(schedule);
  auto& m = result.metrics;
  m["correlation"] = correlation(result.final_state.matrix(), target);
  m["diagonal_correlation"] = diagonal_correlation(result.final_state.matrix(), target);
  if (!schedule.target_state) m["eps_prime"] = epsilon_prime(result.final_state, schedule.target);

  const int n = system.size();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& step = steps[k];
    const DensityMatrix& before = result.snapshots[k].state;
    const DensityMatrix& after = result.snapshots[k + 1].state;
    if (step.kind == StepKind::spin_lock) {
      const SpinPair& pair = step.lock.pairs.front();
      m["singlet_content_" + step.label] = singlet_content(after, pair);
      const Matrix ps = pair_projector(pair, n, PairState::singlet);
      m["singlet_correlation_" + step.label] = correlation(after.matrix(), ps);
    }
    const auto& ins = schedule.instructions[k];
    if (ins.kind == InstructionKind::cnot) {
      const std::array<int, 1> control{ins.spins[0]};
      const Matrix r = reduced_state(before.matrix(), control);
      m["p0_" + step.label] = r(0, 0).real();
      m["p1_" + step.label] = r(1, 1).real();
    }
  }
  return result;
}

RelaxationModel ideal_model(const Schedule& schedule) {
  const auto pairs = locked_pairs(schedule);
  return RelaxationModel::ideal_limit(schedule.num_spins, pairs);
}

ProtocolResult initialize_2q(const SpinSystem& system, const RelaxationModel& model, const SpinLockSpec& lock,
                             const ProtocolOptions& options) {
  require_size(system, 2, "initialize_2q");
  return run_schedule(system, model, two_qubit_schedule(lock), options);
}

ProtocolResult prepare_bell(const SpinSystem& system, const RelaxationModel& model, const SpinLockSpec& lock,
                            BellVariant variant, const ProtocolOptions& options) {
  require_size(system, 2, "prepare_bell");
  return run_schedule(system, model, bell_schedule(lock, variant), options);
}

ProtocolResult initialize_3q(const SpinSystem& system, const RelaxationModel& model, const SpinLockSpec& lock1,
                             const SpinLockSpec& lock2, double cnot_fidelity, const ProtocolOptions& options) {
  require_size(system, 3, "initialize_3q");
  return run_schedule(system, model, three_qubit_schedule(lock1, lock2, cnot_fidelity), options);
}

ProtocolResult initialize_nq(const SpinSystem& system, const RelaxationModel& model, const Schedule& schedule,
                             const ProtocolOptions& options) {
  return run_schedule(system, model, schedule, options);
}

DensityMatrix detect_singlet(const DensityMatrix& rho, const SpinSystem& system, const SpinPair& pair) {
  if (rho.num_spins() != system.size()) throw std::invalid_argument("state and system sizes differ");
  return apply(ud_detection(system, pair), rho);
}

}  // namespace sinit
