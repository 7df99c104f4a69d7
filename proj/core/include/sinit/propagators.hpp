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

#include <span>
#include <string>

#include "sinit/density_matrix.hpp"
#include "sinit/hamiltonian.hpp"
#include "sinit/spin_system.hpp"

namespace sinit {

inline constexpr double kUnitaryTolerance = 1e-10;

class Propagator {
 public:
  /// Throws std::invalid_argument unless U U^dagger = 1 within 1e-10.
  Propagator(Matrix data, std::string label);

  static Propagator identity(int num_spins);

  const Matrix& matrix() const { return data_; }
  const std::string& label() const { return label_; }
  Eigen::Index dim() const { return data_.rows(); }

  /// Composition; the right operand acts first.
  Propagator operator*(const Propagator& other) const;
  Propagator adjoint() const;

 private:
  Matrix data_;
  std::string label_;
};

/// exp(-i 2 pi H t), t in seconds.
Propagator propagate(const Hamiltonian& h, double t);

/// exp(-i angle G) for a Hermitian generator G.
Propagator rotation(const Matrix& generator, double angle, std::string label);

/// exp(-i angle I_axis) on the listed spins.
Propagator pulse(const SpinSystem& system, std::span<const int> spins, Axis axis, double angle);

/// exp(-i angle (Iz_a - Iz_b)).
Propagator differential_z_rotation(const SpinSystem& system, const SpinPair& pair, double angle);

/// exp(-i angle Iz_a Iz_b).
Propagator zz_rotation(const SpinSystem& system, const SpinPair& pair, double angle);

/// Free evolution under (dnu/2)(Iz_a - Iz_b) in the frame at the pair's mean shift.
Propagator chemical_shift_evolution(const SpinSystem& system, const SpinPair& pair, double duration);

/// The differential z-rotation of `angle` realized as chemical-shift evolution
/// for angle / (pi dnu) seconds. Requires distinct shifts and angle >= 0.
Propagator chemical_shift_z_rotation(const SpinSystem& system, const SpinPair& pair, double angle);

/// Free evolution under J Iz_a Iz_b.
Propagator coupling_evolution(const SpinSystem& system, const SpinPair& pair, double duration);

/// |Iz_a + Iz_b deviation| -> |S0><S0| - |T0><T0|.
Propagator u1_singlet_preparation(const SpinSystem& system, const SpinPair& pair);

/// Singlet order -> observable single-quantum coherence.
Propagator ud_detection(const SpinSystem& system, const SpinPair& pair);

/// |S0> -> |01> (up to global phase).
Propagator u2_singlet_to_pseudopure(const SpinSystem& system, const SpinPair& pair);

enum class BellVariant { psi_plus, phi_plus, phi_minus };

std::string to_string(BellVariant variant);
BellVariant parse_bell_variant(const std::string& name);

/// |S0> -> named Bell state on the pair (up to global phase).
Propagator bell_rotation(const SpinSystem& system, const SpinPair& pair, BellVariant variant);

enum class ControlPolarity { on_one, on_zero };

Propagator cnot(const SpinSystem& system, int control, int target, ControlPolarity polarity = ControlPolarity::on_one);

/// |0> -> (|0> - |1>)/sqrt2, |1> -> (|0> + |1>)/sqrt2.
Propagator pseudo_hadamard(const SpinSystem& system, int spin);

/// pi pulse about x on each listed spin.
Propagator not_gate(const SpinSystem& system, std::span<const int> spins);

DensityMatrix apply(const Propagator& u, const DensityMatrix& rho);

}  // namespace sinit
