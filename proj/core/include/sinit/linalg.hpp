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

#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

namespace sinit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Largest register the dense representation accepts (dim = 256).
inline constexpr int kMaxSpins = 8;

enum class Axis { x, y, z };

std::string to_string(Axis axis);

/// Two distinct spins, numbered from 1 as in the usual |q1 q2 ... qn> ket
/// labelling. Spin 1 is the leftmost tensor factor.
struct SpinPair {
  int first = 1;
  int second = 2;

  friend bool operator==(const SpinPair&, const SpinPair&) = default;
};

std::string to_string(const SpinPair& pair);

/// Largest absolute entry of A - A^dagger.
double hermiticity_error(const Matrix& a);

/// Largest absolute entry of U U^dagger - 1.
double unitarity_error(const Matrix& u);

Matrix kron(const Matrix& a, const Matrix& b);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Hilbert-Schmidt inner product Re tr(A^dagger B).
double hs_inner(const Matrix& a, const Matrix& b);

/// Traceless part A - tr(A)/d.
Matrix traceless_part(const Matrix& a);

/// Bit of `spin` (1-based, spin 1 = most significant) in computational index.
inline int spin_bit(std::size_t index, int spin, int num_spins) {
  return static_cast<int>((index >> (num_spins - spin)) & 1U);
}

/// Total magnetic quantum number times two: (#zeros - #ones).
int magnetization2(std::size_t index, int num_spins);

/// Parses a bit string like "010" into a computational-basis index.
std::size_t basis_index(const std::string& bits);

std::string basis_label(std::size_t index, int num_spins);

}  // namespace sinit
