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

#include "sinit/density_matrix.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace sinit {

namespace {

double smallest_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

std::string density_matrix_violation(const Matrix& data) {
  if (data.rows() != data.cols() || data.rows() < 2) return "density matrix must be square with dim >= 2";
  const auto d = static_cast<unsigned long>(data.rows());
  if (!std::has_single_bit(d)) return "density matrix dimension must be a power of two";
  if (std::countr_zero(d) > kMaxSpins) return "density matrix exceeds the dense register limit";
  if (!data.allFinite()) return "density matrix has non-finite entries";
  if (hermiticity_error(data) > kTraceTolerance) return "density matrix is not Hermitian";
  if (std::abs(data.trace() - Complex{1.0, 0.0}) > kTraceTolerance) return "density matrix trace is not 1";
  if (smallest_eigenvalue(data) < kPositivityFloor) return "density matrix is not positive semidefinite";
  return {};
}

DensityMatrix::DensityMatrix(Matrix data) : data_(std::move(data)), num_spins_(0) {
  if (auto why = density_matrix_violation(data_); !why.empty()) throw std::invalid_argument(why);
  num_spins_ = std::countr_zero(static_cast<unsigned long>(data_.rows()));
}

DensityMatrix DensityMatrix::from_evolved(const Matrix& data) {
  Matrix sym = 0.5 * (data + data.adjoint());
  return DensityMatrix(std::move(sym));
}

Matrix DensityMatrix::deviation() const { return traceless_part(data_); }

RealVector DensityMatrix::populations() const { return data_.diagonal().real(); }

double DensityMatrix::purity() const { return (data_ * data_).trace().real(); }

double DensityMatrix::min_eigenvalue() const { return smallest_eigenvalue(data_); }

}  // namespace sinit
