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

#include <string>

#include "sinit/operators.hpp"
#include "sinit/spin_system.hpp"

namespace sinit {

/// Hermitian matrix in Hz (Planck constant factored out).
class Hamiltonian {
 public:
  Hamiltonian(Matrix data, std::string label);

  const Matrix& matrix() const { return data_; }
  const std::string& label() const { return label_; }
  Eigen::Index dim() const { return data_.rows(); }

  Hamiltonian operator+(const Hamiltonian& other) const;

 private:
  Matrix data_;
  std::string label_;
};

/// Sum_j nu_j Iz_j, plus Sum_{j<k} J_jk Iz_j Iz_k when `weak_coupling` is set.
Hamiltonian zeeman_hamiltonian(const SpinSystem& system, bool weak_coupling = false);

/// (dnu/2)(Iz_a - Iz_b) + J I_a.I_b + nu12 (Ix_a + Ix_b), RF at the mean shift of the pair.
Hamiltonian effective_hamiltonian(const SpinSystem& system, const SpinPair& pair, double rf_amplitude_hz);

/// J I_a.I_b for the pair.
Hamiltonian equivalence_hamiltonian(const SpinSystem& system, const SpinPair& pair);

/// J Iz_a Iz_b for the pair.
Hamiltonian coupling_hamiltonian(const SpinSystem& system, const SpinPair& pair);

}  // namespace sinit
