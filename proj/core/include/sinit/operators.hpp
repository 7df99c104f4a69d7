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

#include "sinit/linalg.hpp"
#include "sinit/spin_system.hpp"

namespace sinit {

/// Dense operator on the full 2^n register space.
class Operator {
 public:
  /// Throws std::invalid_argument if `hermitian` is set and the matrix is not
  /// Hermitian within 1e-12.
  Operator(Matrix data, bool hermitian);

  const Matrix& matrix() const { return data_; }
  bool hermitian() const { return hermitian_; }
  Eigen::Index dim() const { return data_.rows(); }

  Operator operator+(const Operator& other) const;
  Operator operator-(const Operator& other) const;
  Operator operator*(const Operator& other) const;
  Operator operator*(double scale) const;

 private:
  Matrix data_;
  bool hermitian_;
};

inline constexpr double kHermitianTolerance = 1e-12;

/// Single-spin (1/2) Pauli matrix for an axis, 2x2.
Matrix half_pauli(Axis axis);

/// I_axis of `spin` embedded with identities on all other spins.
Operator spin_operator(int num_spins, int spin, Axis axis);
Operator spin_operator(const SpinSystem& system, int spin, Axis axis);

/// Sum of spin_operator over `spins`.
Operator collective_operator(int num_spins, std::span<const int> spins, Axis axis);
Operator collective_operator(const SpinSystem& system, std::span<const int> spins, Axis axis);

/// I^a . I^b for a spin pair.
Operator scalar_product(int num_spins, const SpinPair& pair);

/// I_z^a I_z^b for a spin pair.
Operator zz_product(int num_spins, const SpinPair& pair);

/// I_z^a - I_z^b for a spin pair.
Operator z_difference(int num_spins, const SpinPair& pair);

/// Embeds a 4x4 operator written in the |ab> basis of `pair` (a = pair.first
/// as the more significant bit) into the full register.
Matrix embed_pair_operator(const Matrix& op4, const SpinPair& pair, int num_spins);

/// Embeds a 2x2 operator on one spin into the full register.
Matrix embed_spin_operator(const Matrix& op2, int spin, int num_spins);

}  // namespace sinit
