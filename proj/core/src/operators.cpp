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

#include "sinit/operators.hpp"

#include <stdexcept>

namespace sinit {

Operator::Operator(Matrix data, bool hermitian) : data_(std::move(data)), hermitian_(hermitian) {
  if (data_.rows() != data_.cols()) throw std::invalid_argument("operator must be square");
  if (hermitian_ && hermiticity_error(data_) > kHermitianTolerance) {
    throw std::invalid_argument("operator flagged Hermitian is not Hermitian");
  }
}

Operator Operator::operator+(const Operator& other) const {
  return Operator(data_ + other.data_, hermitian_ && other.hermitian_);
}

Operator Operator::operator-(const Operator& other) const {
  return Operator(data_ - other.data_, hermitian_ && other.hermitian_);
}

Operator Operator::operator*(const Operator& other) const {
  Matrix product = data_ * other.data_;
  const bool herm = hermitian_ && other.hermitian_ && hermiticity_error(product) <= kHermitianTolerance;
  return Operator(std::move(product), herm);
}

Operator Operator::operator*(double scale) const { return Operator(data_ * scale, hermitian_); }

Matrix half_pauli(Axis axis) {
  Matrix m = Matrix::Zero(2, 2);
  switch (axis) {
    case Axis::x:
      m(0, 1) = 0.5;
      m(1, 0) = 0.5;
      break;
    case Axis::y:
      m(0, 1) = -0.5 * kI;
      m(1, 0) = 0.5 * kI;
      break;
    case Axis::z:
      m(0, 0) = 0.5;
      m(1, 1) = -0.5;
      break;
  }
  return m;
}

Matrix embed_spin_operator(const Matrix& op2, int spin, int num_spins) {
  check_spin_index(spin, num_spins);
  const std::size_t dim = std::size_t{1} << num_spins;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::size_t mask = std::size_t{1} << (num_spins - spin);
  for (std::size_t col = 0; col < dim; ++col) {
    const int bc = spin_bit(col, spin, num_spins);
    for (int br = 0; br < 2; ++br) {
      const Complex v = op2(br, bc);
      if (v == Complex{}) continue;
      const std::size_t row = br == bc ? col : (col ^ mask);
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
    }
  }
  return out;
}

Matrix embed_pair_operator(const Matrix& op4, const SpinPair& pair, int num_spins) {
  check_pair_indices(pair, num_spins);
  const std::size_t dim = std::size_t{1} << num_spins;
  const std::size_t mask_a = std::size_t{1} << (num_spins - pair.first);
  const std::size_t mask_b = std::size_t{1} << (num_spins - pair.second);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const int code_col = 2 * spin_bit(col, pair.first, num_spins) + spin_bit(col, pair.second, num_spins);
    const std::size_t rest = col & ~(mask_a | mask_b);
    for (int code_row = 0; code_row < 4; ++code_row) {
      const Complex v = op4(code_row, code_col);
      if (v == Complex{}) continue;
      std::size_t row = rest;
      if (code_row & 2) row |= mask_a;
      if (code_row & 1) row |= mask_b;
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
    }
  }
  return out;
}

Operator spin_operator(int num_spins, int spin, Axis axis) {
  return Operator(embed_spin_operator(half_pauli(axis), spin, num_spins), true);
}

Operator spin_operator(const SpinSystem& system, int spin, Axis axis) {
  return spin_operator(system.size(), spin, axis);
}

Operator collective_operator(int num_spins, std::span<const int> spins, Axis axis) {
  if (spins.empty()) throw std::invalid_argument("collective operator needs at least one spin");
  const auto dim = Eigen::Index{1} << num_spins;
  Matrix sum = Matrix::Zero(dim, dim);
  for (int s : spins) sum += spin_operator(num_spins, s, axis).matrix();
  return Operator(std::move(sum), true);
}

Operator collective_operator(const SpinSystem& system, std::span<const int> spins, Axis axis) {
  system.check_spins(spins);
  return collective_operator(system.size(), spins, axis);
}

Operator scalar_product(int num_spins, const SpinPair& pair) {
  check_pair_indices(pair, num_spins);
  const auto dim = Eigen::Index{1} << num_spins;
  Matrix sum = Matrix::Zero(dim, dim);
  for (Axis a : {Axis::x, Axis::y, Axis::z}) {
    sum += spin_operator(num_spins, pair.first, a).matrix() * spin_operator(num_spins, pair.second, a).matrix();
  }
  return Operator(std::move(sum), true);
}

Operator zz_product(int num_spins, const SpinPair& pair) {
  check_pair_indices(pair, num_spins);
  return Operator(spin_operator(num_spins, pair.first, Axis::z).matrix() *
                      spin_operator(num_spins, pair.second, Axis::z).matrix(),
                  true);
}

Operator z_difference(int num_spins, const SpinPair& pair) {
  check_pair_indices(pair, num_spins);
  return spin_operator(num_spins, pair.first, Axis::z) - spin_operator(num_spins, pair.second, Axis::z);
}

}  // namespace sinit
