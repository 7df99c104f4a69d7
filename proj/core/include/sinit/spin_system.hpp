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
#include <span>
#include <vector>

#include "sinit/linalg.hpp"

namespace sinit {

/// Static description of a homonuclear spin-1/2 register.
///
/// Shifts are rotating-frame offsets in Hz, couplings a symmetric matrix of
/// scalar couplings J in Hz with zero diagonal, and epsilon the signed
/// Boltzmann factors that scale each spin's equilibrium deviation. Spins are
/// numbered from 1; spin 1 is the leftmost tensor factor.
class SpinSystem {
 public:
  SpinSystem(std::vector<double> shifts_hz, RealMatrix couplings_hz, std::vector<double> epsilon);

  /// Register of n spins with zero shifts, couplings and polarization.
  static SpinSystem uncoupled(int num_spins);

  int size() const { return static_cast<int>(shifts_.size()); }
  std::size_t dim() const { return std::size_t{1} << shifts_.size(); }

  double shift(int spin) const;
  double coupling(int a, int b) const;
  double epsilon(int spin) const;

  const std::vector<double>& shifts() const { return shifts_; }
  const RealMatrix& couplings() const { return couplings_; }
  const std::vector<double>& epsilons() const { return epsilon_; }

  /// Throws std::out_of_range unless 1 <= spin <= size().
  void check_spin(int spin) const;
  /// Throws unless both spins are valid and distinct.
  void check_pair(const SpinPair& pair) const;
  /// Throws unless non-empty and every index valid (duplicates rejected).
  void check_spins(std::span<const int> spins) const;

 private:
  std::vector<double> shifts_;
  RealMatrix couplings_;
  std::vector<double> epsilon_;
};

void check_spin_index(int spin, int num_spins);
void check_pair_indices(const SpinPair& pair, int num_spins);

}  // namespace sinit
