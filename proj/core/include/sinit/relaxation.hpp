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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sinit/density_matrix.hpp"
#include "sinit/propagators.hpp"

namespace sinit {

struct SingletDecay {
  SpinPair pair;
  double ts = 0.0;                        // singlet lifetime under lock (s)
  std::optional<double> t_lock_coh;       // lock coherence decay (s); default min T2 of the pair
};

class RelaxationModel {
 public:
  /// `t2` may be empty, in which case T2 = T1 per spin. Infinite constants are
  /// allowed and mean "no decay". Requires T2 <= 2 T1 per spin.
  RelaxationModel(std::vector<double> t1, std::vector<double> t2, std::vector<SingletDecay> singlets);

  /// Perfect singlet filter: T_S infinite, every other constant 1e-9 s.
  static RelaxationModel ideal_limit(int num_spins, std::span<const SpinPair> pairs);

  int size() const { return static_cast<int>(t1_.size()); }
  double t1(int spin) const;
  double t2(int spin) const;
  bool has_pair(const SpinPair& pair) const;
  /// Throws std::invalid_argument naming the pair if it has no singlet entry.
  double ts(const SpinPair& pair) const;
  double t_lock_coh(const SpinPair& pair) const;

  const std::vector<double>& t1s() const { return t1_; }
  const std::vector<double>& t2s() const { return t2_; }
  const std::vector<SingletDecay>& singlets() const { return singlets_; }

 private:
  const SingletDecay& entry(const SpinPair& pair) const;

  std::vector<double> t1_;
  std::vector<double> t2_;
  std::vector<SingletDecay> singlets_;
};

enum class LockSequence { cw, waltz16 };

std::string to_string(LockSequence seq);
LockSequence parse_lock_sequence(const std::string& name);

struct SpinLockSpec {
  std::vector<SpinPair> pairs;   // locked simultaneously
  double amplitude_hz = 0.0;     // metadata
  double duration_s = 0.0;
  LockSequence sequence = LockSequence::cw;  // metadata
};

/// exp(-t/tau) with decay(0, tau) == 1 for every tau, including tau -> 0.
double decay(double t, double tau);

/// Lock coherence constant actually applied: the configured value, shortened
/// if needed so the channel stays positive.
double effective_lock_coherence_time(const SpinLockSpec& spec, const RelaxationModel& model);

DensityMatrix spin_lock(const DensityMatrix& rho, const SpinLockSpec& spec, const RelaxationModel& model);

/// Tensor product of single-spin T1/T2 channels toward the maximally mixed
/// state. Acts on every spin, or only on `spins` when given.
DensityMatrix free_relaxation(const DensityMatrix& rho, double duration, const RelaxationModel& model);
DensityMatrix free_relaxation(const DensityMatrix& rho, double duration, const RelaxationModel& model,
                              std::span<const int> spins);

enum class CrushMode { coherence_order, strict };

DensityMatrix gradient_crush(const DensityMatrix& rho, CrushMode mode = CrushMode::coherence_order);

/// Depolarizing weight lambda = (1 - f) d^2 / (d^2 - 1), clipped to [0, 1].
double depolarizing_strength(double fidelity, Eigen::Index dim);

DensityMatrix noisy_gate(const DensityMatrix& rho, const Propagator& u, double fidelity);

}  // namespace sinit
