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
#include <map>
#include <span>

#include "sinit/density_matrix.hpp"

namespace sinit {

enum class CorrelationMode {
  deviation,  // traceless parts only; the uniform background is ignored
  full,       // raw matrices, for diagnostics
};

/// tr(A B) / sqrt(tr(A^2) tr(B^2)) on the selected parts. Throws
/// std::domain_error when either operand vanishes.
double correlation(const Matrix& rho, const Matrix& target, CorrelationMode mode = CorrelationMode::deviation);
double correlation(const DensityMatrix& rho, const DensityMatrix& target,
                   CorrelationMode mode = CorrelationMode::deviation);

/// Same metric with both operands replaced by their diagonal parts.
double diagonal_correlation(const Matrix& rho, const Matrix& target);
double diagonal_correlation(const DensityMatrix& rho, const DensityMatrix& target);

/// Reduced density matrix on `keep` (1-based, output ordered as given).
Matrix reduced_state(const Matrix& rho, std::span<const int> keep);

/// <S0| rho_pair |S0> of the reduced pair state.
double singlet_content(const DensityMatrix& rho, const SpinPair& pair);

/// Element (x, y) goes to order m(x) - m(y), m the total Iz quantum number.
/// The parts sum to rho exactly.
std::map<int, Matrix> coherence_orders(const Matrix& rho);

/// Frobenius norm of each coherence-order part.
std::map<int, double> coherence_order_norms(const Matrix& rho);

RealVector diagonal_tomography(const DensityMatrix& rho);

/// Target population minus the mean of all other populations; equals
/// eps' for an exact pseudopure state.
double epsilon_prime(const DensityMatrix& rho, std::size_t target);

}  // namespace sinit
