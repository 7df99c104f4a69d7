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

#include "sinit/linalg.hpp"

namespace sinit {

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityFloor = -1e-10;

/// Unit-trace, Hermitian, positive semidefinite state of a spin register.
///
/// The uniform background is carried explicitly; deviation() is a view.
class DensityMatrix {
 public:
  /// Validates the invariants and throws std::invalid_argument on breach.
  explicit DensityMatrix(Matrix data);

  /// For outputs of channels: symmetrizes away round-off in the
  /// anti-Hermitian part before validating.
  static DensityMatrix from_evolved(const Matrix& data);

  const Matrix& matrix() const { return data_; }
  Eigen::Index dim() const { return data_.rows(); }
  int num_spins() const { return num_spins_; }

  /// Traceless part rho - 1/d.
  Matrix deviation() const;
  /// Computational-basis populations.
  RealVector populations() const;
  double purity() const;
  double min_eigenvalue() const;

 private:
  Matrix data_;
  int num_spins_;
};

/// Describes which invariant fails, or returns an empty string.
std::string density_matrix_violation(const Matrix& data);

}  // namespace sinit
